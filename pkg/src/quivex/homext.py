"""The three-term complex computing Hom and Ext^1 between framed
representations, materialized as two explicit block matrices.

Block order in the middle term is canonical: arrow blocks in doubled-quiver
declared order, then the W1->V2 blocks by vertex order, then the V1->W2
blocks.  Each block is vectorized row-major.  This layout is what cocycle
files and the reduce/extend machinery decode against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .errors import DimensionError, QuiverMismatchError
from .quiver import chi as chi_formula
from .ratmat import RatMatrix, hstack, image_basis, kernel_basis, rank, rref
from .rep import FramedRep, is_flat


@dataclass(frozen=True)
class BlockSlot:
    kind: str  # "arrow", "I" or "J"
    key: str
    rows: int
    cols: int
    offset: int

    @property
    def size(self) -> int:
        return self.rows * self.cols


class MiddleLayout:
    """Packing and unpacking of (C, D, E) block data to flat column vectors."""

    def __init__(self, slots: tuple[BlockSlot, ...]):
        self.slots = slots
        self.dim = sum(s.size for s in slots)

    def pack(
        self,
        C: Mapping[str, RatMatrix] | None = None,
        D: Mapping[str, RatMatrix] | None = None,
        E: Mapping[str, RatMatrix] | None = None,
    ) -> RatMatrix:
        C, D, E = C or {}, D or {}, E or {}
        tables = {"arrow": C, "I": D, "J": E}
        values = []
        for slot in self.slots:
            block = tables[slot.kind].get(slot.key)
            if block is None:
                values.extend([0] * slot.size)
                continue
            if block.shape != (slot.rows, slot.cols):
                raise DimensionError(
                    f"{slot.kind} block {slot.key!r} has shape {block.shape}, "
                    f"expected {(slot.rows, slot.cols)}"
                )
            for r in range(slot.rows):
                values.extend(block.row(r))
        return RatMatrix.column(values)

    def unpack(self, vec: RatMatrix):
        if vec.shape != (self.dim, 1):
            raise DimensionError(f"middle vector has shape {vec.shape}, expected ({self.dim}, 1)")
        C: dict[str, RatMatrix] = {}
        D: dict[str, RatMatrix] = {}
        E: dict[str, RatMatrix] = {}
        for slot in self.slots:
            rows = [
                [vec[slot.offset + r * slot.cols + c, 0] for c in range(slot.cols)]
                for r in range(slot.rows)
            ]
            block = RatMatrix.from_rows(rows, cols=slot.cols)
            {"arrow": C, "I": D, "J": E}[slot.kind][slot.key] = block
        return C, D, E

    def descriptor(self) -> list[list]:
        return [[s.kind, s.key, s.rows, s.cols] for s in self.slots]


class GradedLayout:
    """Flat layout of one V1_i -> V2_i block per vertex, row-major."""

    def __init__(self, vertices: tuple[str, ...], shapes: dict[str, tuple[int, int]]):
        self.vertices = vertices
        self.shapes = shapes
        self.offsets: dict[str, int] = {}
        pos = 0
        for v in vertices:
            self.offsets[v] = pos
            r, c = shapes[v]
            pos += r * c
        self.dim = pos

    def pack(self, blocks: Mapping[str, RatMatrix]) -> RatMatrix:
        values = []
        for v in self.vertices:
            r, c = self.shapes[v]
            block = blocks.get(v, RatMatrix.zeros(r, c))
            if block.shape != (r, c):
                raise DimensionError(f"graded block at {v!r} has shape {block.shape}, expected {(r, c)}")
            for i in range(r):
                values.extend(block.row(i))
        return RatMatrix.column(values)

    def unpack(self, vec: RatMatrix) -> dict[str, RatMatrix]:
        blocks = {}
        for v in self.vertices:
            r, c = self.shapes[v]
            off = self.offsets[v]
            blocks[v] = RatMatrix.from_rows(
                [[vec[off + i * c + j, 0] for j in range(c)] for i in range(r)], cols=c
            )
        return blocks


class Complex3:
    """alpha and beta of the complex for a pair of framed representations.

    The cohomological readings (Hom, Ext^1, dual Hom) are valid only when
    both inputs are flat; the ``flat`` flag records that, while the matrix
    ranks themselves are computed unconditionally.
    """

    def __init__(self, x1: FramedRep, x2: FramedRep):
        if x1.dq != x2.dq:
            raise QuiverMismatchError("complex over two different quivers")
        self.x1 = x1
        self.x2 = x2
        dq = x1.dq
        v1, w1 = x1.dim_v, x1.dim_w
        v2, w2 = x2.dim_v, x2.dim_w
        slots = []
        pos = 0
        for a in dq.arrows:
            r, c = v2[a.target], v1[a.source]
            slots.append(BlockSlot("arrow", a.name, r, c, pos))
            pos += r * c
        for i in dq.vertices:
            r, c = v2[i], w1[i]
            slots.append(BlockSlot("I", i, r, c, pos))
            pos += r * c
        for i in dq.vertices:
            r, c = w2[i], v1[i]
            slots.append(BlockSlot("J", i, r, c, pos))
            pos += r * c
        self.middle = MiddleLayout(tuple(slots))
        self.ends = GradedLayout(dq.vertices, {i: (v2[i], v1[i]) for i in dq.vertices})
        self.alpha = self._build_alpha()
        self.beta = self._build_beta()

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.ends.dim, self.middle.dim, self.ends.dim)

    @cached_property
    def flat(self) -> bool:
        return is_flat(self.x1) and is_flat(self.x2)

    def _apply_alpha(self, xi: Mapping[str, RatMatrix]) -> RatMatrix:
        x1, x2, dq = self.x1, self.x2, self.x1.dq
        C = {
            a.name: xi[a.target] @ x1.B[a.name] - x2.B[a.name] @ xi[a.source]
            for a in dq.arrows
        }
        D = {i: xi[i] @ x1.I[i] for i in dq.vertices}
        E = {i: -(x2.J[i] @ xi[i]) for i in dq.vertices}
        return self.middle.pack(C, D, E)

    def _build_alpha(self) -> RatMatrix:
        cols = []
        for k in range(self.ends.dim):
            unit = RatMatrix.column([1 if t == k else 0 for t in range(self.ends.dim)])
            cols.append(self._apply_alpha(self.ends.unpack(unit)))
        return hstack(cols, rows=self.middle.dim)

    def _apply_beta(self, vec: RatMatrix) -> RatMatrix:
        x1, x2, dq = self.x1, self.x2, self.x1.dq
        C, D, E = self.middle.unpack(vec)
        blocks = {}
        for i in dq.vertices:
            acc = RatMatrix.zeros(x2.dim_v[i], x1.dim_v[i])
            for a in dq.arrows_into(i):
                term = x2.B[a.name] @ C[dq.bar(a.name)] + C[a.name] @ x1.B[dq.bar(a.name)]
                acc = acc + (term if dq.eps(a.name) == 1 else -term)
            acc = acc + x2.I[i] @ E[i] + D[i] @ x1.J[i]
            blocks[i] = acc
        return self.ends.pack(blocks)

    def _build_beta(self) -> RatMatrix:
        cols = []
        for k in range(self.middle.dim):
            unit = RatMatrix.column([1 if t == k else 0 for t in range(self.middle.dim)])
            cols.append(self._apply_beta(unit))
        return hstack(cols, rows=self.ends.dim)

    @cached_property
    def rank_alpha(self) -> int:
        return rank(self.alpha)

    @cached_property
    def rank_beta(self) -> int:
        return rank(self.beta)

    @cached_property
    def kernel_alpha(self) -> list[RatMatrix]:
        return kernel_basis(self.alpha)

    @cached_property
    def kernel_beta(self) -> list[RatMatrix]:
        return kernel_basis(self.beta)

    def hom_dim(self) -> int:
        return len(self.kernel_alpha)

    def ext1_dim(self) -> int:
        return len(self.kernel_beta) - self.rank_alpha

    def cohom_dim(self) -> int:
        return self.ends.dim - self.rank_beta

    def hom_basis(self) -> list[dict[str, RatMatrix]]:
        return [self.ends.unpack(v) for v in self.kernel_alpha]

    def ext1_reps(self) -> list[RatMatrix]:
        """Deterministic cocycle representatives: the kernel-of-beta basis
        vectors that extend an echelon basis of the image of alpha."""
        im = image_basis(self.alpha)
        ker = self.kernel_beta
        stacked = hstack(im + ker, rows=self.middle.dim)
        _, pivots = rref(stacked)
        return [ker[j - len(im)] for j in pivots if j >= len(im)]


def build_complex(x1: FramedRep, x2: FramedRep) -> Complex3:
    return Complex3(x1, x2)


def hom_dim(x1: FramedRep, x2: FramedRep) -> int:
    return build_complex(x1, x2).hom_dim()


def hom_basis(x1: FramedRep, x2: FramedRep) -> list[dict[str, RatMatrix]]:
    return build_complex(x1, x2).hom_basis()


def ext1_dim(x1: FramedRep, x2: FramedRep) -> int:
    return build_complex(x1, x2).ext1_dim()


def ext1_reps(x1: FramedRep, x2: FramedRep) -> list[RatMatrix]:
    return build_complex(x1, x2).ext1_reps()


def cohom_dim(x1: FramedRep, x2: FramedRep) -> int:
    return build_complex(x1, x2).cohom_dim()


@dataclass(frozen=True)
class EulerCheck:
    computed: int
    formula: int

    @property
    def equal(self) -> bool:
        return self.computed == self.formula


def euler_check(x1: FramedRep, x2: FramedRep) -> EulerCheck:
    """ext1 - hom - cohom against the signed dimension count; the two always
    agree by rank-nullity, so a mismatch flags an internal bug."""
    c = build_complex(x1, x2)
    computed = c.ext1_dim() - c.hom_dim() - c.cohom_dim()
    formula = chi_formula(x1.dq.base, x1.dim_v, x1.dim_w, x2.dim_v, x2.dim_w)
    return EulerCheck(computed, formula)


def hom_ext_report(x1: FramedRep, x2: FramedRep) -> dict:
    """Everything the hom-ext CLI emits, including the duality cross-checks."""
    c12 = build_complex(x1, x2)
    c21 = build_complex(x2, x1)
    euler = euler_check(x1, x2)
    return {
        "hom": c12.hom_dim(),
        "ext1": c12.ext1_dim(),
        "cohom": c12.cohom_dim(),
        "chi": euler.formula,
        "complex_dims": list(c12.dims),
        "duality_ok": c12.cohom_dim() == c21.hom_dim() and c21.cohom_dim() == c12.hom_dim(),
        "euler_ok": euler.equal,
        "ext1_symmetric": c12.ext1_dim() == c21.ext1_dim(),
        "flat": [is_flat(x1), is_flat(x2)],
    }
