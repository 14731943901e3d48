import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quivex.bundles import a2crystal_bundle, d4_bundle
from quivex.errors import DependentClassesError, DomainError
from quivex.hecke import (
    are_isomorphic,
    epsilon_i,
    ext_space_i,
    extend_i,
    recovery_classes,
    reduce_i,
)
from quivex.invariants import pi_fingerprint
from quivex.quiver import Arrow, DimVector, Quiver, ZetaParam, ade_minimal_resolution_setup, chi, d_of, double
from quivex.ratmat import RatMatrix
from quivex.rep import FramedRep, conjugate, is_flat, sample_flat_crystal, simple_rep
from quivex.stability import is_stable

A2 = ade_minimal_resolution_setup("A2")[0]
DQ2 = double(A2)
POS = ZetaParam.constant(A2, 1)


@pytest.fixture(scope="module")
def crystal():
    return a2crystal_bundle()


def test_epsilon_simple_itself():
    s = simple_rep(DQ2, "1")
    assert epsilon_i(s, "1") == 1
    assert epsilon_i(s, "2") == 0


def test_epsilon_on_crystal_points(crystal):
    generic = crystal.reps["generic"]
    special = crystal.reps["special"]
    assert epsilon_i(generic, "1") == 0
    assert epsilon_i(special, "1") == 1  # the jump at the special point
    assert epsilon_i(generic, "2") == 2
    assert epsilon_i(special, "2") == 2


def test_epsilon_rejects_loops():
    dq = double(Quiver(["1"], [Arrow("l", "1", "1")]))
    with pytest.raises(DomainError):
        epsilon_i(simple_rep(dq, "1"), "1")


def test_reduce_noop_when_no_homs(crystal):
    generic = crystal.reps["generic"]
    red = reduce_i(generic, "1")
    assert red.r == 0
    assert red.reduced is generic


def test_reduce_lands_at_expected_dims(crystal):
    for name in ("generic", "special"):
        red = reduce_i(crystal.reps[name], "2")
        assert red.r == 2
        assert red.reduced.dim_v.as_dict() == {"1": 1, "2": 0}
        assert is_flat(red.reduced)
        assert is_stable(red.reduced, POS).stable
        assert epsilon_i(red.reduced, "2") == 0


def test_reduce_preserves_fingerprint(crystal):
    x = crystal.reps["generic"]
    red = reduce_i(x, "2")
    assert pi_fingerprint(x, 6) == pi_fingerprint(red.reduced, 6)


def test_reduce_inclusion_intertwines(crystal):
    x = crystal.reps["generic"]
    red = reduce_i(x, "2")
    inc = red.inclusion
    for a in DQ2.arrows:
        assert x.B[a.name] @ inc[a.source] == inc[a.target] @ red.reduced.B[a.name]
    for i in DQ2.vertices:
        assert inc[i] @ red.reduced.I[i] == x.I[i]
        assert x.J[i] @ inc[i] == red.reduced.J[i]


def test_ext_space_dimensions(crystal):
    assert len(ext_space_i(crystal.reps["generic"], "1")) == 1
    assert len(ext_space_i(crystal.reps["special"], "1")) == 2


def test_round_trip_is_isomorphic(crystal):
    for name in ("generic", "special"):
        x = crystal.reps[name]
        red = reduce_i(x, "2")
        classes = recovery_classes(x, "2", red)
        assert len(classes) == red.r
        rebuilt = extend_i(red.reduced, "2", classes)
        assert is_flat(rebuilt)
        assert is_stable(rebuilt, POS).stable
        assert are_isomorphic(rebuilt, x)


def test_dimension_identity_on_round_trip(crystal):
    x = crystal.reps["generic"]
    red = reduce_i(x, "2")
    small = red.reduced
    gap = d_of(A2, x.dim_v, x.dim_w) - d_of(A2, small.dim_v, small.dim_w)
    chi_small = chi(A2, DimVector.unit(A2, "2"), DimVector.zero(A2), small.dim_v, small.dim_w)
    assert gap == 2 * red.r * (chi_small - red.r) == 4


def test_extend_with_no_classes_is_identity(crystal):
    x = crystal.reps["generic"]
    assert extend_i(x, "1", []) is x


def test_extend_rejects_dependent_classes(crystal):
    x = crystal.reps["generic"]
    red = reduce_i(x, "2")
    classes = recovery_classes(x, "2", red)
    with pytest.raises(DependentClassesError):
        extend_i(red.reduced, "2", [classes[0], classes[0].scale(2)])


def test_extend_rejects_non_cocycles():
    # a middle vector violating the cocycle equation cannot extend flatly
    q, v, w = ade_minimal_resolution_setup("A2")
    x = FramedRep(DQ2, DimVector.of(q, {"1": 1, "2": 1}), w,
                  B={"1->2": RatMatrix.from_rows([[1]])},
                  I={"1": RatMatrix.from_rows([[2]])})
    assert is_flat(x)
    from quivex.homext import build_complex

    c = build_complex(simple_rep(DQ2, "2"), x)
    bad = None
    for k in range(c.middle.dim):
        candidate = RatMatrix.column([1 if t == k else 0 for t in range(c.middle.dim)])
        if not (c.beta @ candidate).is_zero:
            bad = candidate
            break
    assert bad is not None
    with pytest.raises(DomainError, match="cocycle"):
        extend_i(x, "2", [bad])


def test_reduce_requires_stability():
    zero = FramedRep(DQ2, DimVector.of(A2, {"1": 1, "2": 0}), DimVector.zero(A2))
    with pytest.raises(DomainError):
        reduce_i(zero, "1")


def test_are_isomorphic_basics(crystal):
    x = crystal.reps["generic"]
    assert are_isomorphic(x, x)
    g = {"1": RatMatrix.from_rows([[5]]), "2": RatMatrix.from_rows([[1, 3], [0, 2]])}
    assert are_isomorphic(x, conjugate(x, g))
    assert not are_isomorphic(simple_rep(DQ2, "1"), simple_rep(DQ2, "2"))
    assert not are_isomorphic(x, crystal.reps["special"])


def test_d4_point_reduces_to_core():
    bundle = d4_bundle()
    point = bundle.reps["point"]
    core = bundle.reps["core"]
    q = point.dq.base
    assert is_flat(point) and is_stable(point, ZetaParam.constant(q, 1)).stable
    assert epsilon_i(point, "2") == 1
    red = reduce_i(point, "2")
    assert red.reduced.dim_v.as_dict() == core.dim_v.as_dict()
    assert are_isomorphic(red.reduced, core)
    rebuilt = extend_i(red.reduced, "2", recovery_classes(point, "2", red))
    assert are_isomorphic(rebuilt, point)


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=15)
def test_crystal_walk_round_trips(seed):
    v = DimVector.of(A2, {"1": 1, "2": 2})
    w = DimVector.of(A2, {"1": 1, "2": 2})
    x = sample_flat_crystal(DQ2, v, w, seed)
    if x is None or not is_stable(x, POS).stable:
        return
    for i in DQ2.vertices:
        if epsilon_i(x, i) == 0:
            continue
        red = reduce_i(x, i)
        rebuilt = extend_i(red.reduced, i, recovery_classes(x, i, red))
        assert are_isomorphic(rebuilt, x)
