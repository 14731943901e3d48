import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quivex.bundles import an_bundle
from quivex.errors import BadPathError, DimensionError, QuiverMismatchError
from quivex.quiver import DimVector, ade_minimal_resolution_setup, double
from quivex.ratmat import RatMatrix, is_invertible
from quivex.rep import (
    FramedRep,
    cb_apply,
    conjugate,
    direct_sum,
    evaluate_path,
    is_flat,
    moment_map,
    sample_flat,
    sample_flat_crystal,
    simple_rep,
)

A1 = ade_minimal_resolution_setup("A1")[0]
A2 = ade_minimal_resolution_setup("A2")[0]
DQ1 = double(A1)
DQ2 = double(A2)


def a1_rep(k, n, I=None, J=None):
    return FramedRep(
        DQ1,
        DimVector.of(A1, {"1": k}),
        DimVector.of(A1, {"1": n}),
        I={"1": I} if I is not None else None,
        J={"1": J} if J is not None else None,
    )


def random_rep(dq, v, w, seed):
    """Fully random representation; generally not flat."""
    rng = random.Random(seed)

    def m(rows, cols):
        return RatMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols=cols
        )

    B = {a.name: m(v[a.target], v[a.source]) for a in dq.arrows}
    I = {i: m(v[i], w[i]) for i in dq.vertices}
    J = {i: m(w[i], v[i]) for i in dq.vertices}
    return FramedRep(dq, v, w, B, I, J)


def test_moment_a1_orthogonal_framing():
    x = a1_rep(1, 2, I=RatMatrix.from_rows([[1, 0]]), J=RatMatrix.from_rows([[0], [1]]))
    assert moment_map(x).blocks["1"].is_zero
    assert is_flat(x)


def test_moment_a2_signs():
    one = RatMatrix.from_rows([[1]])
    v = DimVector.of(A2, {"1": 1, "2": 1})
    x = FramedRep(DQ2, v, DimVector.zero(A2), B={"1->2": one, "1->2*": one})
    mu = moment_map(x)
    assert mu.blocks["1"] == RatMatrix.from_rows([[-1]])
    assert mu.blocks["2"] == RatMatrix.from_rows([[1]])
    assert not is_flat(x)


def test_zero_rep_flat():
    x = FramedRep(DQ2, DimVector.of(A2, {"1": 2, "2": 1}), DimVector.zero(A2))
    assert is_flat(x)


def test_simple_rep():
    s = simple_rep(DQ2, "1")
    assert s.dim_v.as_dict() == {"1": 1, "2": 0}
    assert s.dim_w.total() == 0
    assert is_flat(s)
    assert moment_map(s).blocks["1"] == RatMatrix.zeros(1, 1)


def test_direct_sum_dims_and_flatness():
    x = sample_flat(DQ2, DimVector.of(A2, {"1": 1, "2": 2}), DimVector.of(A2, {"1": 1}), 5)
    y = sample_flat(DQ2, DimVector.of(A2, {"1": 2, "2": 1}), DimVector.of(A2, {"2": 2}), 6, half="reverse")
    s = direct_sum(x, y)
    assert s.dim_v.as_dict() == {"1": 3, "2": 3}
    assert s.dim_w.as_dict() == {"1": 1, "2": 2}
    assert is_flat(s)
    mu_x = moment_map(x).blocks["1"]
    mu_s = moment_map(s).blocks["1"]
    assert all(mu_s[i, j] == mu_x[i, j] for i in range(mu_x.rows) for j in range(mu_x.cols))


def test_direct_sum_quiver_mismatch():
    x = simple_rep(DQ1, "1")
    y = simple_rep(DQ2, "1")
    with pytest.raises(QuiverMismatchError):
        direct_sum(x, y)


def test_evaluate_path():
    bundle = an_bundle(3)
    x = bundle.reps["broken_1"]
    assert evaluate_path(x, [], start="2") == RatMatrix.identity(1)
    assert evaluate_path(x, ["1->2"]) == x.B["1->2"]
    chain = evaluate_path(x, ["1->2", "2->3"], start="1")
    assert chain == x.B["2->3"] @ x.B["1->2"]
    with pytest.raises(BadPathError):
        evaluate_path(x, ["1->2", "1->2"])
    with pytest.raises(BadPathError):
        evaluate_path(x, [], start=None)


def test_shape_validation():
    with pytest.raises(DimensionError):
        FramedRep(
            DQ1,
            DimVector.of(A1, {"1": 1}),
            DimVector.of(A1, {"1": 2}),
            I={"1": RatMatrix.identity(2)},
        )
    with pytest.raises(DimensionError):
        FramedRep(DQ2, DimVector.zero(A2), DimVector.zero(A2), B={"nope": RatMatrix.zeros(0, 0)})


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=40)
def test_sample_flat_is_flat(seed):
    v = DimVector.of(A2, {"1": 2, "2": 2})
    w = DimVector.of(A2, {"1": 1, "2": 1})
    assert is_flat(sample_flat(DQ2, v, w, seed))
    assert is_flat(sample_flat(DQ2, v, w, seed, half="reverse"))


def test_sample_flat_seed_repeatable():
    v = DimVector.of(A2, {"1": 2, "2": 1})
    w = DimVector.of(A2, {"1": 1})
    assert sample_flat(DQ2, v, w, 42) == sample_flat(DQ2, v, w, 42)
    assert sample_flat(DQ2, v, w, 42) != sample_flat(DQ2, v, w, 43)


def test_sample_flat_crystal_flat_with_nonzero_J():
    v = DimVector.of(A2, {"1": 1, "2": 2})
    w = DimVector.of(A2, {"1": 1, "2": 2})
    x = sample_flat_crystal(DQ2, v, w, 7)
    assert x is not None
    assert is_flat(x)
    assert any(not x.J[i].is_zero for i in DQ2.vertices)


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=40)
def test_trace_identity_on_arbitrary_reps(seed):
    # the arrow terms of the moment map cancel in pairs under the total trace
    v = DimVector.of(A2, {"1": 2, "2": 2})
    w = DimVector.of(A2, {"1": 1, "2": 2})
    x = random_rep(DQ2, v, w, seed)
    framing_trace = sum((x.I[i] @ x.J[i]).trace() for i in DQ2.vertices)
    assert moment_map(x).trace_sum() == framing_trace


def test_conjugate_preserves_flatness_and_moment():
    v = DimVector.of(A2, {"1": 1, "2": 2})
    w = DimVector.of(A2, {"1": 1, "2": 2})
    x = sample_flat_crystal(DQ2, v, w, 11)
    g = {"1": RatMatrix.from_rows([[2]]), "2": RatMatrix.from_rows([[1, 1], [0, 1]])}
    assert all(is_invertible(m) for m in g.values())
    y = conjugate(x, g)
    assert is_flat(y)
    assert y.dim_v == x.dim_v


def test_cb_apply_zero_rep():
    x = FramedRep(DQ2, DimVector.of(A2, {"1": 1, "2": 1}), DimVector.of(A2, {"1": 1}))
    y = cb_apply(x)
    assert y.dim_v["inf"] == 1
    assert y.dim_w.total() == 0
    assert all(m.is_zero for m in y.B.values())


def test_cb_apply_a1_unpacks_columns():
    x = a1_rep(1, 2, I=RatMatrix.from_rows([[1, 0]]), J=RatMatrix.from_rows([[0], [1]]))
    y = cb_apply(x)
    assert len(y.dq.base.arrows) == 2
    assert y.B["inf->1#0"] == RatMatrix.from_rows([[1]])
    assert y.B["inf->1#1"] == RatMatrix.from_rows([[0]])
    assert y.B["inf->1#0*"] == RatMatrix.from_rows([[0]])
    assert y.B["inf->1#1*"] == RatMatrix.from_rows([[1]])
    assert is_flat(y)


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=30)
def test_cb_apply_flatness_transfer(seed):
    v = DimVector.of(A2, {"1": 1, "2": 2})
    w = DimVector.of(A2, {"1": 2, "2": 1})
    x = sample_flat(DQ2, v, w, seed, half="reverse")
    assert is_flat(cb_apply(x))
