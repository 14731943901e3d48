"""Coordinates on the affine quotient: traces of oriented cycles and framed
path entries, plus the explicit relations of the rank-one and chain setups.

Labels are plain tuples, ordered deterministically, so two fingerprints can
be compared entry by entry.  Cycle words are deduplicated up to cyclic
rotation (lexicographically least rotation) but not reversal: a reversed
cycle is a genuinely different word in the doubled quiver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import WrongSetupError
from .quiver import DimVector, DoubledQuiver, ade_minimal_resolution_setup
from .ratmat import RatMatrix, rank
from .rep import FramedRep, evaluate_path

CycleLabel = tuple[str, ...]
PathLabel = tuple[str, tuple[str, ...], str, int, int]
FingerprintEntry = tuple[tuple, Fraction]


def _least_rotation(word: tuple[str, ...]) -> tuple[str, ...]:
    return min(tuple(word[k:] + word[:k]) for k in range(len(word)))


def oriented_cycles(dq: DoubledQuiver, max_length: int) -> list[CycleLabel]:
    """Closed arrow walks of length 1..max_length, one representative per
    rotation class, sorted by (length, word)."""
    found: set[CycleLabel] = set()

    def walk(base: str, here: str, word: list[str]) -> None:
        if word and here == base:
            found.add(_least_rotation(tuple(word)))
        if len(word) == max_length:
            return
        for a in dq.arrows_out_of(here):
            word.append(a.name)
            walk(base, a.target, word)
            word.pop()

    for v in dq.vertices:
        walk(v, v, [])
    return sorted(found, key=lambda w: (len(w), w))


def cycle_traces(x: FramedRep, max_length: int) -> list[tuple[CycleLabel, Fraction]]:
    out = []
    for word in oriented_cycles(x.dq, max_length):
        start = x.dq.arrow(word[0]).source
        out.append((word, evaluate_path(x, word, start=start).trace()))
    return out


def framed_paths(dq: DoubledQuiver, dim_w: DimVector, max_length: int) -> list[tuple[str, tuple[str, ...], str]]:
    """Walks between framed vertices (both endpoints with positive W),
    including the empty walk, sorted deterministically."""
    framed = [v for v in dq.vertices if dim_w[v] > 0]
    found: list[tuple[str, tuple[str, ...], str]] = []

    def walk(origin: str, here: str, word: list[str]) -> None:
        if dim_w[here] > 0:
            found.append((origin, tuple(word), here))
        if len(word) == max_length:
            return
        for a in dq.arrows_out_of(here):
            word.append(a.name)
            walk(origin, a.target, word)
            word.pop()

    for v in framed:
        walk(v, v, [])
    index = {v: k for k, v in enumerate(dq.vertices)}
    found.sort(key=lambda t: (len(t[1]), index[t[0]], index[t[2]], t[1]))
    return found


def path_invariants(x: FramedRep, max_length: int) -> list[tuple[PathLabel, Fraction]]:
    """Entries of J_target (path product) I_origin for every framed walk."""
    out = []
    for origin, word, target in framed_paths(x.dq, x.dim_w, max_length):
        value = x.J[target] @ evaluate_path(x, word, start=origin) @ x.I[origin]
        for r in range(value.rows):
            for c in range(value.cols):
                out.append(((origin, word, target, r, c), value[r, c]))
    return out


def default_degree_bound(x: FramedRep) -> int:
    return 2 * x.dim_v.total()


def pi_fingerprint(x: FramedRep, max_length: int | None = None) -> list[FingerprintEntry]:
    """Cycle traces followed by framed path entries up to the degree bound.

    Two representations with equal fingerprints have the same affine-quotient
    image as far as degree-bounded invariants can see; no claim is made that
    the default bound separates all orbits.
    """
    bound = default_degree_bound(x) if max_length is None else max_length
    entries: list[FingerprintEntry] = []
    for word, value in cycle_traces(x, bound):
        entries.append((("cycle",) + word, value))
    for label, value in path_invariants(x, bound):
        entries.append((("path",) + label, value))
    return entries


def fingerprint_is_zero(entries: list[FingerprintEntry]) -> bool:
    return all(value == 0 for _, value in entries)


@dataclass(frozen=True)
class A1Relations:
    A: RatMatrix
    squares_to_zero: bool
    rank_ok: bool


def a1_relations(x: FramedRep) -> A1Relations:
    """The endomorphism A = J I of the framing on a one-vertex quiver, with
    the quotient-variety membership checks: A^2 = 0 whenever the input is
    flat, and rank A bounded by the fiber dimension."""
    base = x.dq.base
    if len(base.vertices) != 1 or base.arrows:
        raise WrongSetupError("a1_relations needs the one-vertex quiver with no arrows")
    v = base.vertices[0]
    A = x.J[v] @ x.I[v]
    return A1Relations(A, (A @ A).is_zero, rank(A) <= x.dim_v[v])


@dataclass(frozen=True)
class AnXYZ:
    x: Fraction
    y: Fraction
    z: Fraction
    relation_ok: bool


def an_xyz(x: FramedRep) -> AnXYZ:
    """The three generating scalars of the chain setup and the exact check
    x*y = z^(n+1).

    y is the full reversed-chain composite with its sign normalized so the
    stated relation holds on the nose for flat points; without the sign flip
    the moment-map relations force x*(raw y) = -z^(n+1).
    """
    n = len(x.dq.base.vertices)
    if n < 2:
        raise WrongSetupError("an_xyz needs a chain with at least two vertices")
    expected_q, expected_v, expected_w = ade_minimal_resolution_setup(f"A{n}")
    if x.dq.base != expected_q or x.dim_v != expected_v or x.dim_w != expected_w:
        raise WrongSetupError("an_xyz needs the chain minimal-resolution setup")
    forward = [f"{k}->{k + 1}" for k in range(1, n)]
    backward = [f"{k}->{k + 1}*" for k in range(n - 1, 0, -1)]
    first, last = "1", str(n)
    xv = (x.J[last] @ evaluate_path(x, forward, start=first) @ x.I[first])[0, 0]
    yv = -(x.J[first] @ evaluate_path(x, backward, start=last) @ x.I[last])[0, 0]
    zv = (x.J[first] @ x.I[first])[0, 0]
    return AnXYZ(xv, yv, zv, xv * yv == zv ** (n + 1))
