"""Framed representations (B, I, J) of a doubled quiver.

Shape convention: the matrix of an arrow maps the source fiber to the target
fiber acting on column vectors, so it has shape target-dim by source-dim;
``evaluate_path`` therefore multiplies matrices right to left along a path.
Representations are immutable and every operation is a pure function.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BadPathError, DimensionError, NotFlatError, QuiverMismatchError
from .quiver import DimVector, DoubledQuiver
from .ratmat import RatMatrix, hstack, inverse, vstack


@dataclass(frozen=True)
class GradedEndo:
    """One square matrix per vertex, the size of the V-fiber there."""

    blocks: Mapping[str, RatMatrix]

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero for m in self.blocks.values())

    def trace_sum(self):
        total = 0
        for m in self.blocks.values():
            total = m.trace() + total
        return total


class FramedRep:
    """Matrices B per doubled arrow, I and J per vertex, over exact rationals.

    Every block is present with its exact forced shape, including
    zero-dimensional ones; omitted blocks are materialized as zeros.
    """

    def __init__(
        self,
        dq: DoubledQuiver,
        dim_v: DimVector,
        dim_w: DimVector,
        B: Mapping[str, RatMatrix] | None = None,
        I: Mapping[str, RatMatrix] | None = None,
        J: Mapping[str, RatMatrix] | None = None,
    ):
        if dim_v.vertices != dq.vertices or dim_w.vertices != dq.vertices:
            raise QuiverMismatchError("dimension vectors keyed to a different quiver")
        self.dq = dq
        self.dim_v = dim_v
        self.dim_w = dim_w
        B = dict(B or {})
        I = dict(I or {})
        J = dict(J or {})
        known = {a.name for a in dq.arrows}
        for key in B:
            if key not in known:
                raise DimensionError(f"B block for unknown arrow {key!r}")
        for table, label in ((I, "I"), (J, "J")):
            for key in table:
                if key not in dq.vertices:
                    raise DimensionError(f"{label} block for unknown vertex {key!r}")
        self.B: dict[str, RatMatrix] = {}
        for a in dq.arrows:
            shape = (dim_v[a.target], dim_v[a.source])
            m = B.get(a.name, RatMatrix.zeros(*shape))
            if m.shape != shape:
                raise DimensionError(
                    f"B[{a.name!r}] has shape {m.shape}, expected {shape}"
                )
            self.B[a.name] = m
        self.I: dict[str, RatMatrix] = {}
        self.J: dict[str, RatMatrix] = {}
        for i in dq.vertices:
            ishape = (dim_v[i], dim_w[i])
            jshape = (dim_w[i], dim_v[i])
            mi = I.get(i, RatMatrix.zeros(*ishape))
            mj = J.get(i, RatMatrix.zeros(*jshape))
            if mi.shape != ishape:
                raise DimensionError(f"I[{i!r}] has shape {mi.shape}, expected {ishape}")
            if mj.shape != jshape:
                raise DimensionError(f"J[{i!r}] has shape {mj.shape}, expected {jshape}")
            self.I[i] = mi
            self.J[i] = mj

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FramedRep)
            and self.dq == other.dq
            and self.dim_v == other.dim_v
            and self.dim_w == other.dim_w
            and self.B == other.B
            and self.I == other.I
            and self.J == other.J
        )

    def __repr__(self) -> str:
        return f"FramedRep(dimV={self.dim_v.values}, dimW={self.dim_w.values})"


def moment_map(x: FramedRep) -> GradedEndo:
    """Per-vertex sum of eps(h) B_h B_hbar over arrows into the vertex, plus I J."""
    blocks = {}
    for i in x.dq.vertices:
        n = x.dim_v[i]
        acc = RatMatrix.zeros(n, n)
        for a in x.dq.arrows_into(i):
            term = x.B[a.name] @ x.B[x.dq.bar(a.name)]
            acc = acc + (term if x.dq.eps(a.name) == 1 else -term)
        acc = acc + x.I[i] @ x.J[i]
        blocks[i] = acc
    return GradedEndo(blocks)


def is_flat(x: FramedRep) -> bool:
    return moment_map(x).is_zero


def ensure_flat(x: FramedRep, what: str = "representation") -> None:
    if not is_flat(x):
        raise NotFlatError(f"{what} does not satisfy the moment-map equations")


def simple_rep(dq: DoubledQuiver, i: str) -> FramedRep:
    """The one-dimensional representation at vertex i with all maps zero."""
    return FramedRep(dq, DimVector.unit(dq, i), DimVector.zero(dq))


def direct_sum(x: FramedRep, y: FramedRep) -> FramedRep:
    """Componentwise direct sum on both V and W, all blocks block-diagonal."""
    if x.dq != y.dq:
        raise QuiverMismatchError("direct sum of representations over different quivers")
    dq = x.dq
    dim_v = x.dim_v + y.dim_v
    dim_w = x.dim_w + y.dim_w

    def diag(a: RatMatrix, b: RatMatrix) -> RatMatrix:
        top = hstack([a, RatMatrix.zeros(a.rows, b.cols)])
        bottom = hstack([RatMatrix.zeros(b.rows, a.cols), b])
        return vstack([top, bottom])

    B = {a.name: diag(x.B[a.name], y.B[a.name]) for a in dq.arrows}
    I = {i: diag(x.I[i], y.I[i]) for i in dq.vertices}
    J = {i: diag(x.J[i], y.J[i]) for i in dq.vertices}
    return FramedRep(dq, dim_v, dim_w, B, I, J)


def evaluate_path(x: FramedRep, path: Sequence[str], start: str | None = None) -> RatMatrix:
    """Ordered product of arrow matrices along a path given in traversal
    order; the empty path at ``start`` evaluates to the identity there."""
    if not path:
        if start is None:
            raise BadPathError("empty path needs a start vertex")
        return RatMatrix.identity(x.dim_v[start])
    arrows = [x.dq.arrow(name) for name in path]
    if start is not None and arrows[0].source != start:
        raise BadPathError(f"path starts at {arrows[0].source!r}, not {start!r}")
    for left, right in zip(arrows, arrows[1:]):
        if left.target != right.source:
            raise BadPathError(f"arrows {left.name!r} and {right.name!r} do not compose")
    product = x.B[arrows[0].name]
    for a in arrows[1:]:
        product = x.B[a.name] @ product
    return product


def conjugate(x: FramedRep, g: Mapping[str, RatMatrix]) -> FramedRep:
    """Base change by an invertible graded map: B -> g B g^-1, I -> g I, J -> J g^-1."""
    ginv = {i: inverse(g[i]) for i in x.dq.vertices}
    B = {
        a.name: g[a.target] @ x.B[a.name] @ ginv[a.source]
        for a in x.dq.arrows
    }
    I = {i: g[i] @ x.I[i] for i in x.dq.vertices}
    J = {i: x.J[i] @ ginv[i] for i in x.dq.vertices}
    return FramedRep(x.dq, x.dim_v, x.dim_w, B, I, J)


def _random_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    # entries stay in {-3..3} to bound rational growth downstream
    return RatMatrix.from_rows(
        [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def sample_flat(
    dq: DoubledQuiver,
    dim_v: DimVector,
    dim_w: DimVector,
    seed: int,
    half: str = "forward",
) -> FramedRep:
    """A seed-deterministic flat representation.

    With ``half="forward"`` the reversed-arrow matrices and all J vanish
    (random B on the base arrows, random I), so every moment-map term dies;
    ``half="reverse"`` is the mirror image with random reversed arrows and J.
    """
    if half not in ("forward", "reverse"):
        raise ValueError(f"unknown half {half!r}")
    rng = random.Random(seed)
    B: dict[str, RatMatrix] = {}
    for a in dq.arrows:
        reversed_arrow = a.name.endswith("*")
        live = reversed_arrow if half == "reverse" else not reversed_arrow
        if live:
            B[a.name] = _random_matrix(rng, dim_v[a.target], dim_v[a.source])
    I: dict[str, RatMatrix] = {}
    J: dict[str, RatMatrix] = {}
    for i in dq.vertices:
        if half == "forward":
            I[i] = _random_matrix(rng, dim_v[i], dim_w[i])
        else:
            J[i] = _random_matrix(rng, dim_w[i], dim_v[i])
    return FramedRep(dq, dim_v, dim_w, B, I, J)


def sample_flat_crystal(
    dq: DoubledQuiver,
    dim_v: DimVector,
    dim_w: DimVector,
    seed: int,
) -> FramedRep | None:
    """A flat point built by extension steps from the empty representation.

    Grows one fiber dimension at a time, at seeded vertices, by picking an
    extension class against the simple module there; this produces points
    with nonzero J.  Returns None when some step has no extensions left
    (the caller should fall back to ``sample_flat``).
    """
    from . import hecke, homext  # local import: hecke sits a layer above rep

    rng = random.Random(seed)
    order = [v for v in dq.vertices for _ in range(dim_v[v])]
    rng.shuffle(order)
    x = FramedRep(dq, DimVector.zero(dq), dim_w)
    for vertex in order:
        reps = homext.ext1_reps(simple_rep(dq, vertex), x)
        if not reps:
            return None
        coeffs = [rng.randint(-2, 2) for _ in reps]
        if all(c == 0 for c in coeffs):
            coeffs[rng.randrange(len(coeffs))] = 1
        cls = reps[0].scale(coeffs[0])
        for c, r in zip(coeffs[1:], reps[1:]):
            cls = cls + r.scale(c)
        x = hecke.extend_i(x, vertex, [cls])
    return x


def cb_apply(x: FramedRep, infinity: str = "inf") -> FramedRep:
    """Rewrite the framing as arrow matrices of the one-vertex-extended quiver.

    Column k of I_i becomes the matrix of the k-th new arrow into i, row k of
    J_i the matrix of its reversal; the new vertex carries a one-dimensional
    fiber and the result is unframed.  Flat inputs map to flat outputs,
    including at the new vertex, because the framing traces cancel.
    """
    from .quiver import cb_transform, double

    q2, inf = cb_transform(x.dq.base, x.dim_w, infinity)
    dq2 = double(q2)
    dims = x.dim_v.as_dict()
    dims[inf] = 1
    dim_v2 = DimVector.of(q2, dims)
    B: dict[str, RatMatrix] = {}
    for a in x.dq.arrows:
        B[a.name] = x.B[a.name]
    for i in x.dq.vertices:
        for k in range(x.dim_w[i]):
            name = f"{inf}->{i}#{k}"
            B[name] = x.I[i].column_matrix(k)
            B[name + "*"] = RatMatrix.from_rows([list(x.J[i].row(k))], cols=x.dim_v[i])
    return FramedRep(dq2, dim_v2, DimVector.zero(q2), B)
