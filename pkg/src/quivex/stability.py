"""Sign-definite stability for framed representations.

For an all-positive parameter, a flat point is stable exactly when the
largest invariant graded subspace inside Ker J vanishes; for an all-negative
parameter, exactly when the smallest invariant graded subspace over Im I is
everything.  Mixed-sign parameters would require quantifying over invariant
subspaces of every dimension vector and are rejected as unsupported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedZetaError
from .quiver import DimVector, ZetaParam
from .ratmat import (
    RatMatrix,
    annihilator_rows,
    column_space_echelon,
    hstack,
    kernel_basis,
    vstack,
)
from .rep import FramedRep, ensure_flat
from . import homext


@dataclass(frozen=True)
class GradedSubspace:
    """An echelon column basis of a subspace of the V-fiber at each vertex."""

    blocks: dict[str, RatMatrix]

    def dims(self) -> dict[str, int]:
        return {v: m.cols for v, m in self.blocks.items()}

    def total(self) -> int:
        return sum(m.cols for m in self.blocks.values())

    def is_zero(self) -> bool:
        return self.total() == 0

    def equals_ambient(self, dim_v: DimVector) -> bool:
        return all(m.cols == dim_v[v] for v, m in self.blocks.items())


def max_invariant_in_kerJ(x: FramedRep) -> GradedSubspace:
    """Largest graded subspace inside Ker J preserved by every arrow matrix.

    Decreasing fixed-point iteration; each pass intersects with the arrow
    preimages, and the pass that changes nothing certifies maximality.
    """
    dq = x.dq
    basis = {
        i: column_space_echelon(hstack(kernel_basis(x.J[i]), rows=x.dim_v[i]))
        for i in dq.vertices
    }
    while True:
        ann = {i: annihilator_rows(basis[i]) for i in dq.vertices}
        new_basis = {}
        changed = False
        for i in dq.vertices:
            m = basis[i]
            constraints = [ann[a.target] @ x.B[a.name] for a in dq.arrows_out_of(i)]
            if constraints:
                stacked = vstack(constraints, cols=x.dim_v[i])
                inner = hstack(kernel_basis(stacked @ m), rows=m.cols)
                new = column_space_echelon(m @ inner)
            else:
                new = m
            if new.cols != m.cols:
                changed = True
            new_basis[i] = new
        basis = new_basis
        if not changed:
            return GradedSubspace(basis)


def min_invariant_over_imI(x: FramedRep) -> GradedSubspace:
    """Smallest graded subspace containing every Im I and preserved by B;
    increasing fixed-point iteration."""
    dq = x.dq
    basis = {i: column_space_echelon(x.I[i]) for i in dq.vertices}
    while True:
        new_basis = {}
        changed = False
        for i in dq.vertices:
            pieces = [basis[i]] + [x.B[a.name] @ basis[a.source] for a in dq.arrows_into(i)]
            new = column_space_echelon(hstack(pieces, rows=x.dim_v[i]))
            if new.cols != basis[i].cols:
                changed = True
            new_basis[i] = new
        basis = new_basis
        if not changed:
            return GradedSubspace(basis)


@dataclass(frozen=True)
class StabilityResult:
    stable: bool
    witness: GradedSubspace | None

    @property
    def verdict(self) -> str:
        return "stable" if self.stable else "unstable"


def is_stable(x: FramedRep, zeta: ZetaParam) -> StabilityResult:
    """Stability verdict for a sign-definite parameter, with a witness
    subspace violating the strict inequality when unstable.

    Under sign-definiteness stability and semistability coincide, so a
    single extremal subspace decides the verdict.
    """
    ensure_flat(x)
    sign = zeta.sign_class
    if sign == "positive":
        s = max_invariant_in_kerJ(x)
        if s.is_zero():
            return StabilityResult(True, None)
        return StabilityResult(False, s)
    if sign == "negative":
        t = min_invariant_over_imI(x)
        if t.equals_ambient(x.dim_v):
            return StabilityResult(True, None)
        return StabilityResult(False, t)
    raise UnsupportedZetaError(
        "mixed-sign stability parameters are not supported; "
        "use an all-positive or all-negative zeta"
    )


def stabilizer_trivial(x: FramedRep) -> bool:
    """True when the framed self-Hom space vanishes, which is what kills the
    group stabilizer of the point."""
    ensure_flat(x)
    return homext.hom_dim(x, x) == 0
