import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quivex.bundles import a2crystal_bundle
from quivex.errors import QuiverMismatchError
from quivex.homext import (
    build_complex,
    cohom_dim,
    euler_check,
    ext1_dim,
    ext1_reps,
    hom_basis,
    hom_dim,
    hom_ext_report,
)
from quivex.quiver import DimVector, ade_minimal_resolution_setup, chi, double
from quivex.rep import FramedRep, sample_flat, sample_flat_crystal, simple_rep

A2 = ade_minimal_resolution_setup("A2")[0]
DQ2 = double(A2)


def flat_pair(seed):
    v1 = DimVector.of(A2, {"1": 1, "2": 2})
    w1 = DimVector.of(A2, {"1": 1, "2": 1})
    v2 = DimVector.of(A2, {"1": 2, "2": 1})
    w2 = DimVector.of(A2, {"1": 1, "2": 2})
    x = sample_flat_crystal(DQ2, v1, w1, seed) or sample_flat(DQ2, v1, w1, seed)
    y = sample_flat(DQ2, v2, w2, seed + 1, half="reverse")
    return x, y


def test_simple_self_complex():
    s = simple_rep(DQ2, "1")
    c = build_complex(s, s)
    assert c.dims == (1, 0, 1)
    assert c.alpha.is_zero and c.beta.is_zero
    assert hom_dim(s, s) == 1
    assert ext1_dim(s, s) == 0
    assert cohom_dim(s, s) == 1


def test_simple_to_other_simple():
    s1, s2 = simple_rep(DQ2, "1"), simple_rep(DQ2, "2")
    c = build_complex(s1, s2)
    assert c.dims == (0, 1, 0)
    assert hom_dim(s1, s2) == 0
    assert ext1_dim(s1, s2) == 1
    assert ext1_dim(s2, s1) == 1


def test_crystal_point_against_simple_shape():
    # the displayed V1 -> V2 + W1 -> V1 complex of the blowup story
    x = a2crystal_bundle().reps["generic"]
    c = build_complex(simple_rep(DQ2, "1"), x)
    assert c.dims == (1, 3, 1)
    assert c.ext1_dim() == 1
    special = a2crystal_bundle().reps["special"]
    assert build_complex(simple_rep(DQ2, "1"), special).ext1_dim() == 2


def test_stable_point_euler_split():
    # with no Homs from the simple, ext1 minus cohom is the chi value
    x = a2crystal_bundle().reps["generic"]
    s = simple_rep(DQ2, "1")
    c = build_complex(s, x)
    assert c.hom_dim() == 0
    expected = chi(A2, s.dim_v, s.dim_w, x.dim_v, x.dim_w)
    assert c.ext1_dim() - c.cohom_dim() == expected == 1


def test_quiver_mismatch():
    a3 = ade_minimal_resolution_setup("A3")[0]
    with pytest.raises(QuiverMismatchError):
        build_complex(simple_rep(DQ2, "1"), simple_rep(double(a3), "1"))


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=30)
def test_beta_alpha_zero_on_flat_pairs(seed):
    x, y = flat_pair(seed)
    c = build_complex(x, y)
    assert (c.beta @ c.alpha).is_zero


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=30)
def test_duality_and_symmetry(seed):
    x, y = flat_pair(seed)
    assert cohom_dim(x, y) == hom_dim(y, x)
    assert cohom_dim(y, x) == hom_dim(x, y)
    assert ext1_dim(x, y) == ext1_dim(y, x)


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=30)
def test_euler_identity(seed):
    x, y = flat_pair(seed)
    check = euler_check(x, y)
    assert check.equal
    end1, middle, end2 = build_complex(x, y).dims
    assert check.formula == middle - end1 - end2


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=20)
def test_hom_basis_intertwines(seed):
    x, y = flat_pair(seed)
    for xi in hom_basis(x, y):
        for a in DQ2.arrows:
            lhs = xi[a.target] @ x.B[a.name]
            rhs = y.B[a.name] @ xi[a.source]
            assert lhs == rhs
        for i in DQ2.vertices:
            assert (xi[i] @ x.I[i]).is_zero
            assert (y.J[i] @ xi[i]).is_zero


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=20)
def test_ext1_reps_are_independent_cocycles(seed):
    x, y = flat_pair(seed)
    c = build_complex(x, y)
    reps = ext1_reps(x, y)
    assert len(reps) == c.ext1_dim()
    for vec in reps:
        assert (c.beta @ vec).is_zero


def test_nonflat_inputs_flagged():
    one_v = DimVector.of(A2, {"1": 1, "2": 1})
    from quivex.ratmat import RatMatrix

    bad = FramedRep(
        DQ2,
        one_v,
        DimVector.zero(A2),
        B={"1->2": RatMatrix.from_rows([[1]]), "1->2*": RatMatrix.from_rows([[1]])},
    )
    c = build_complex(bad, bad)
    assert not c.flat
    report = hom_ext_report(bad, bad)
    assert report["flat"] == [False, False]


def test_report_on_flat_pair():
    x, y = flat_pair(3)
    report = hom_ext_report(x, y)
    assert report["duality_ok"] and report["euler_ok"] and report["ext1_symmetric"]
    assert report["hom"] - report["ext1"] + report["cohom"] == -report["chi"]
