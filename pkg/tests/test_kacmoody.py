import itertools

import pytest

from quivex.errors import CutoffError, InvalidCartanError
from quivex.kacmoody import (
    DEFAULT_CUTOFF_SLACK,
    MultiplicitySession,
    WeightSpec,
    h_eigenvalue,
    is_finite_type,
    predicted_component_count,
    root_multiplicities,
    roots_for_quiver,
    validate_gcm,
    weight_multiplicity,
)
from quivex.quiver import (
    Arrow,
    DimVector,
    Quiver,
    ade_minimal_resolution_setup,
    cartan_matrix,
    cb_transform,
    d_of,
)


def brute_force_positive_roots(gcm, bound):
    """Independent oracle for simply-laced finite type: nonzero nonnegative
    vectors of squared norm 2 in a coefficient box."""
    n = len(gcm)
    roots = []
    for beta in itertools.product(range(bound + 1), repeat=n):
        if not any(beta):
            continue
        norm = sum(beta[i] * gcm[i][j] * beta[j] for i in range(n) for j in range(n))
        if norm == 2:
            roots.append(beta)
    return sorted(roots)


@pytest.mark.parametrize(
    "label,expected_count",
    [("A2", 3), ("A3", 6), ("D4", 12), ("D5", 20), ("E6", 36)],
)
def test_finite_root_counts_against_brute_force(label, expected_count):
    q = ade_minimal_resolution_setup(label)[0]
    gcm = cartan_matrix(q)
    rs = root_multiplicities(gcm)
    assert rs.finite
    enumerated = sorted(beta for beta, mult in rs.positive_roots)
    assert enumerated == brute_force_positive_roots(gcm, 6)
    assert len(enumerated) == expected_count
    assert all(mult == 1 for _, mult in rs.positive_roots)


def test_gcm_validation():
    with pytest.raises(InvalidCartanError):
        validate_gcm(((0,),))  # edge-loop diagonal
    with pytest.raises(InvalidCartanError):
        validate_gcm(((2, -1), (0, 2)))  # not symmetric
    with pytest.raises(InvalidCartanError):
        validate_gcm(((2, 1), (1, 2)))  # positive off-diagonal


def test_jordan_quiver_rejected_upstream():
    q = Quiver(["1"], [Arrow("l", "1", "1")])
    with pytest.raises(InvalidCartanError):
        roots_for_quiver(q, 4)


def test_finite_type_detection():
    assert is_finite_type(((2, -1), (-1, 2)))
    assert not is_finite_type(((2, -2), (-2, 2)))


def test_affine_root_multiplicities_by_peterson():
    # untwisted affine rank-two: real roots and imaginary multiples of delta,
    # every multiplicity equal to one
    gcm = ((2, -2), (-2, 2))
    rs = root_multiplicities(gcm, cutoff=8)
    assert not rs.finite
    table = dict(rs.positive_roots)
    for k in range(1, 5):
        assert table[(k, k)] == 1  # k * delta
    for k in range(0, 4):
        assert table[(k + 1, k)] == 1 and table[(k, k + 1)] == 1  # real roots
    assert (2, 0) not in table and (3, 1) not in table


def test_sl2_weight_multiplicities():
    q = ade_minimal_resolution_setup("A1")[0]
    for n in range(0, 7):
        w = DimVector.of(q, {"1": n})
        for k in range(0, n + 3):
            v = DimVector.of(q, {"1": k})
            expected = 1 if k <= n else 0
            assert predicted_component_count(q, v, w) == expected


def test_an_adjoint_zero_weight():
    for n in range(2, 7):
        q, v, w = ade_minimal_resolution_setup(f"A{n}")
        assert predicted_component_count(q, v, w) == n


def test_an_adjoint_other_weights_zero_or_one():
    # highest root minus the drop must be a root (weight space a point) or
    # a non-root (empty); hand-checked against the consecutive-sum roots
    q, _, w = ade_minimal_resolution_setup("A3")
    cases = {
        (1, 1, 0): 1,
        (0, 1, 1): 1,
        (1, 0, 1): 1,
        (1, 2, 1): 1,
        (2, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 0, 0): 0,
        (0, 2, 0): 0,
        (3, 1, 1): 0,
    }
    for drop, expected in cases.items():
        v = DimVector(q.vertices, drop)
        assert predicted_component_count(q, v, w) == expected, drop


def test_d4_adjoint():
    q, v, w = ade_minimal_resolution_setup("D4")
    assert predicted_component_count(q, v, w) == 4
    roots = roots_for_quiver(q, v.total() + DEFAULT_CUTOFF_SLACK)
    session = MultiplicitySession(roots, w.values)
    total = sum(
        session.multiplicity(drop)
        for drop in itertools.product(*[range(0, 2 * m + 1) for m in v.values])
    )
    assert total == 28


def test_total_dimension_sl2_and_a2():
    q1 = ade_minimal_resolution_setup("A1")[0]
    roots1 = roots_for_quiver(q1, 10)
    for n in (2, 5):
        session = MultiplicitySession(roots1, (n,))
        assert sum(session.multiplicity((k,)) for k in range(0, n + 1)) == n + 1
    q2, v2, w2 = ade_minimal_resolution_setup("A2")
    roots2 = roots_for_quiver(q2, 10)
    session = MultiplicitySession(roots2, w2.values)
    total = sum(
        session.multiplicity(drop) for drop in itertools.product(range(0, 3), repeat=2)
    )
    assert total == 8  # adjoint of the rank-two special linear algebra


def test_weyl_symmetry_of_multiplicities():
    q, v, w = ade_minimal_resolution_setup("D4")
    roots = roots_for_quiver(q, 12)
    session = MultiplicitySession(roots, w.values)
    gcm = cartan_matrix(q)
    for drop in itertools.product(range(0, 3), range(0, 4), range(0, 3), range(0, 3)):
        for idx in range(4):
            h = w.values[idx] - sum(gcm[idx][j] * drop[j] for j in range(4))
            reflected = tuple(
                d + (h if j == idx else 0) for j, d in enumerate(drop)
            )
            if all(r >= 0 for r in reflected):
                assert session.multiplicity(drop) == session.multiplicity(reflected)


def test_h_eigenvalue():
    q = ade_minimal_resolution_setup("A1")[0]
    for n in range(0, 5):
        for k in range(0, 5):
            v = DimVector.of(q, {"1": k})
            w = DimVector.of(q, {"1": n})
            assert h_eigenvalue(q, v, w, "1") == n - 2 * k
    q2, v2, w2 = ade_minimal_resolution_setup("A2")
    assert h_eigenvalue(q2, DimVector.zero(q2), w2, "1") == w2["1"]


def test_highest_weight_space_is_a_point():
    for label in ("A2", "D4"):
        q, _, w = ade_minimal_resolution_setup(label)
        assert predicted_component_count(q, DimVector.zero(q), w) == 1


def test_negative_expected_dimension_means_zero_count():
    q, _, _ = ade_minimal_resolution_setup("A2")
    for vals in itertools.product(range(0, 4), repeat=2):
        v = DimVector(q.vertices, vals)
        for wvals in itertools.product(range(0, 3), repeat=2):
            w = DimVector(q.vertices, wvals)
            if d_of(q, v, w) < 0:
                assert predicted_component_count(q, v, w) == 0


def test_cutoff_error_is_loud():
    q = ade_minimal_resolution_setup("A1")[0]
    affine, _ = cb_transform(q, DimVector.of(q, {"1": 2}))
    roots = roots_for_quiver(affine, 3)
    spec = WeightSpec(
        DimVector.of(affine, {"1": 1, "inf": 1}),
        DimVector.of(affine, {"1": 3, "inf": 2}),
    )
    with pytest.raises(CutoffError):
        weight_multiplicity(roots, spec)
