"""Reduction and extension of framed representations by one simple module at
a time: the string datum epsilon_i, the canonical kernel of the projection
onto copies of the simple at a vertex, and the reverse construction from
extension classes.

Extension classes live in the middle term of the complex built against the
simple module at the vertex, packed in that complex's block layout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DependentClassesError, DomainError, QuiverMismatchError
from .quiver import DimVector, ZetaParam, chi as chi_formula, d_of
from .ratmat import (
    RatMatrix,
    column_space_echelon,
    hstack,
    image_basis,
    rank,
    rref,
    solve_exact,
    vstack,
)
from .rep import FramedRep, ensure_flat, is_flat, simple_rep
from .stability import is_stable
from . import homext


def _require_loop_free(x: FramedRep, what: str) -> None:
    if x.dq.base.has_edge_loops:
        raise DomainError(f"{what} assumes a quiver without edge loops")


def epsilon_i(x: FramedRep, i: str) -> int:
    """Dimension of the Hom space to the simple module at vertex i, computed
    two ways (kernel against the simple, cokernel with the simple first) and
    cross-checked; disagreement would be a duality bug."""
    _require_loop_free(x, "epsilon_i")
    ensure_flat(x)
    s = simple_rep(x.dq, i)
    via_kernel = homext.build_complex(x, s).hom_dim()
    via_cokernel = homext.build_complex(s, x).cohom_dim()
    assert via_kernel == via_cokernel, (
        f"epsilon_i duality mismatch at {i!r}: {via_kernel} vs {via_cokernel}"
    )
    return via_kernel


@dataclass(frozen=True)
class ReductionResult:
    reduced: FramedRep
    r: int
    inclusion: dict[str, RatMatrix]


def _assert_d_identity(q, v_big: DimVector, v_small: DimVector, w: DimVector, i: str, r: int) -> None:
    chi_small = chi_formula(q, DimVector.unit(q, i), DimVector.zero(q), v_small, w)
    gap = d_of(q, v_big, w) - d_of(q, v_small, w)
    assert gap == 2 * r * (chi_small - r), (
        f"dimension identity failed at {i!r}: {gap} vs {2 * r * (chi_small - r)}"
    )


def reduce_i(x: FramedRep, i: str) -> ReductionResult:
    """Strip every copy of the simple at vertex i off the top of x.

    The new fiber at i is the image of beta in the complex with the simple
    first (echelon basis, so the construction is a function); all maps are
    restricted or corestricted along it.  The result is flat, has no Hom to
    the simple at i, keeps the quotient-invariant fingerprint, and satisfies
    the exact dimension identity, which is asserted.
    """
    _require_loop_free(x, "reduce_i")
    ensure_flat(x)
    if not is_stable(x, ZetaParam.constant(x.dq, 1)).stable:
        raise DomainError("reduce_i needs a stable input")
    s = simple_rep(x.dq, i)
    c = homext.build_complex(s, x)
    assert c.hom_dim() == 0, "stable point admits the simple as a submodule"
    image = column_space_echelon(c.beta)
    r = x.dim_v[i] - image.cols
    inclusion = {
        j: RatMatrix.identity(x.dim_v[j]) if j != i else image for j in x.dq.vertices
    }
    if r == 0:
        result = ReductionResult(x, 0, inclusion)
        _assert_d_identity(x.dq.base, x.dim_v, x.dim_v, x.dim_w, i, 0)
        return result
    dim_small = x.dim_v.replace(i, image.cols)
    B = {}
    for a in x.dq.arrows:
        m = x.B[a.name]
        if a.target == i:
            m = solve_exact(image, m)
        if a.source == i:
            m = m @ image
        B[a.name] = m
    I = dict(x.I)
    J = dict(x.J)
    I[i] = solve_exact(image, x.I[i])
    J[i] = x.J[i] @ image
    reduced = FramedRep(x.dq, dim_small, x.dim_w, B, I, J)
    if not is_flat(reduced):
        raise AssertionError("reduction of a flat representation came out non-flat")
    assert epsilon_i(reduced, i) == 0, "reduction left Homs to the simple behind"
    _assert_d_identity(x.dq.base, x.dim_v, dim_small, x.dim_w, i, r)
    return ReductionResult(reduced, r, inclusion)


def ext_space_i(x: FramedRep, i: str) -> list[RatMatrix]:
    """Cocycle representatives of the middle cohomology of the complex with
    the simple at vertex i first, as packed middle vectors.

    The space is well defined for any flat input; recovering stable points
    by extension additionally wants epsilon_i(x) = 0, which callers on the
    induction path check themselves.
    """
    _require_loop_free(x, "ext_space_i")
    ensure_flat(x)
    return homext.build_complex(simple_rep(x.dq, i), x).ext1_reps()


def extend_i(x: FramedRep, i: str, classes: list[RatMatrix]) -> FramedRep:
    """Enlarge the fiber at vertex i by one coordinate per extension class.

    Arrows leaving i gain the class's arrow columns, J_i gains its framing
    column, and arrows entering i and I_i gain zero rows, so the quotient by
    the old representation is a sum of simples with zero maps.  The cocycle
    condition is exactly flatness of the result and is verified; classes
    must be independent modulo the coboundaries.
    """
    _require_loop_free(x, "extend_i")
    ensure_flat(x)
    r = len(classes)
    if r == 0:
        return x
    c = homext.build_complex(simple_rep(x.dq, i), x)
    for vec in classes:
        if vec.shape != (c.middle.dim, 1):
            raise DomainError(
                f"extension class has shape {vec.shape}, expected ({c.middle.dim}, 1)"
            )
        if not (c.beta @ vec).is_zero:
            raise DomainError("extension class is not a cocycle")
    im = image_basis(c.alpha)
    _, pivots = rref(hstack(im + classes, rows=c.middle.dim))
    if len(pivots) != len(im) + r:
        raise DependentClassesError("extension classes are dependent modulo the coboundaries")
    decoded = [c.middle.unpack(vec) for vec in classes]
    dim_big = x.dim_v.replace(i, x.dim_v[i] + r)
    B = {}
    for a in x.dq.arrows:
        m = x.B[a.name]
        if a.source == i:
            new_cols = [C[a.name] for C, _, _ in decoded]
            m = hstack([m] + new_cols)
        if a.target == i:
            m = vstack([m, RatMatrix.zeros(r, m.cols)])
        B[a.name] = m
    I = dict(x.I)
    J = dict(x.J)
    I[i] = vstack([x.I[i], RatMatrix.zeros(r, x.dim_w[i])])
    J[i] = hstack([x.J[i]] + [E[i] for _, _, E in decoded])
    out = FramedRep(x.dq, dim_big, x.dim_w, B, I, J)
    if not is_flat(out):
        raise AssertionError("cocycle extension came out non-flat")
    _assert_d_identity(x.dq.base, dim_big, x.dim_v, x.dim_w, i, r)
    return out


def recovery_classes(x: FramedRep, i: str, reduction: ReductionResult) -> list[RatMatrix]:
    """The tautological extension classes that rebuild x from its reduction.

    Completing the echelon inclusion at i by the standard basis vectors away
    from its pivot rows gives a complement of the reduced fiber; reading the
    arrow and framing columns of x on that complement yields one cocycle per
    stripped copy of the simple, and extending the reduction by them returns
    a representation isomorphic to x.
    """
    if reduction.r == 0:
        return []
    inclusion = reduction.inclusion[i]
    pivot_rows = set()
    for col in range(inclusion.cols):
        for row in range(inclusion.rows):
            if inclusion[row, col] != 0:
                pivot_rows.add(row)
                break
    complement = [row for row in range(x.dim_v[i]) if row not in pivot_rows]
    assert len(complement) == reduction.r
    layout = homext.build_complex(simple_rep(x.dq, i), reduction.reduced).middle
    classes = []
    for row in complement:
        unit = RatMatrix.column([1 if t == row else 0 for t in range(x.dim_v[i])])
        C = {a.name: x.B[a.name] @ unit for a in x.dq.arrows_out_of(i)}
        E = {i: x.J[i] @ unit}
        classes.append(layout.pack(C=C, E=E))
    return classes


_PROBE_SEED = 0x51E57A
_PROBE_ATTEMPTS = 64


def are_isomorphic(x: FramedRep, y: FramedRep) -> bool:
    """Whether some invertible graded map intertwines all arrow and framing
    matrices.

    Solves the exact intertwiner system, then probes the affine solution
    space for an invertible member (the particular solution plus seeded
    small combinations of the kernel basis).  A True answer is sound; a
    False answer after probing is correct unless every random combination
    landed on the vanishing locus of the determinant, which has measure
    zero.
    """
    if x.dq != y.dq:
        raise QuiverMismatchError("isomorphism test across different quivers")
    if x.dim_v != y.dim_v or x.dim_w != y.dim_w:
        return False
    c = homext.build_complex(x, y)
    target = c.middle.pack(D={i: y.I[i] for i in x.dq.vertices},
                           E={i: -x.J[i] for i in x.dq.vertices})
    try:
        particular = solve_exact(c.alpha, target)
    except DomainError:
        return False
    kernel = c.kernel_alpha

    def invertible(vec: RatMatrix) -> bool:
        blocks = c.ends.unpack(vec)
        return all(rank(m) == m.rows for m in blocks.values())

    if invertible(particular):
        return True
    rng = random.Random(_PROBE_SEED)
    for attempt in range(_PROBE_ATTEMPTS):
        if not kernel:
            break
        bound = 1 + attempt // 16
        candidate = particular
        for k in kernel:
            candidate = candidate + k.scale(rng.randint(-bound, bound))
        if invertible(candidate):
            return True
    return False
