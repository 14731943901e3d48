"""Independent weight-multiplicity oracle for the symmetric Kac-Moody algebra
attached to a loop-free quiver.

Positive roots come from exact reflection enumeration in finite type and
from the Peterson recursion up to a height cutoff otherwise; weight
multiplicities of the integrable highest-weight module come from the
Freudenthal recursion.  Conventions: simple roots are coordinate vectors,
the bilinear form is the Cartan matrix itself, and the Weyl functional
pairs to 1 against every simple root.  All arithmetic is exact.

Sessions own their memo tables; share a session across threads only with
external locking (one session per thread is the supported pattern).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import CutoffError, DomainError, InvalidCartanError
from .quiver import DimVector, Quiver, cartan_matrix, chi

GCM = tuple[tuple[int, ...], ...]
Coeffs = tuple[int, ...]


def validate_gcm(gcm: GCM) -> None:
    n = len(gcm)
    for row in gcm:
        if len(row) != n:
            raise InvalidCartanError("Cartan matrix is not square")
    for i in range(n):
        if gcm[i][i] != 2:
            raise InvalidCartanError(f"diagonal entry {gcm[i][i]} at {i}; expected 2 (no edge loops)")
        for j in range(n):
            if i != j and gcm[i][j] > 0:
                raise InvalidCartanError("positive off-diagonal entry")
            if gcm[i][j] != gcm[j][i]:
                raise InvalidCartanError("Cartan matrix is not symmetric")


def is_finite_type(gcm: GCM) -> bool:
    """Positive definiteness via exact symmetric elimination pivots."""
    n = len(gcm)
    work = [[Fraction(v) for v in row] for row in gcm]
    for k in range(n):
        pivot = work[k][k]
        if pivot <= 0:
            return False
        for r in range(k + 1, n):
            f = work[r][k] / pivot
            if f == 0:
                continue
            for c in range(k, n):
                work[r][c] -= f * work[k][c]
    return True


def _dot(gcm: GCM, a: Coeffs, b: Coeffs) -> int:
    return sum(a[i] * gcm[i][j] * b[j] for i in range(len(a)) for j in range(len(a)))


def _finite_positive_roots(gcm: GCM) -> list[tuple[Coeffs, int]]:
    """All positive roots of a finite-type symmetric GCM by closing the
    simple roots under simple reflections; every multiplicity is 1."""
    n = len(gcm)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen: set[Coeffs] = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            pairing = sum(gcm[i][j] * beta[j] for j in range(n))
            gamma = tuple(
                beta[j] - (pairing if j == i else 0) for j in range(n)
            )
            if gamma not in seen:
                seen.add(gamma)
                frontier.append(gamma)
    positives = sorted(
        (b for b in seen if all(v >= 0 for v in b) and any(v > 0 for v in b)),
        key=lambda b: (sum(b), b),
    )
    return [(b, 1) for b in positives]


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _peterson_roots(gcm: GCM, cutoff: int) -> list[tuple[Coeffs, int]]:
    """Root multiplicities up to the height cutoff by Peterson's recursion on
    the auxiliary coefficients c_beta = sum over divisors of mult/k."""
    n = len(gcm)
    c: dict[Coeffs, Fraction] = {}
    mult: dict[Coeffs, int] = {}
    for i in range(n):
        alpha = tuple(1 if j == i else 0 for j in range(n))
        c[alpha] = Fraction(1)
        mult[alpha] = 1
    for height in range(2, cutoff + 1):
        for beta in _compositions(height, n):
            numerator = Fraction(0)
            ranges = [range(b + 1) for b in beta]
            for part in itertools.product(*ranges):
                if not any(part) or part == beta:
                    continue
                rest = tuple(b - p for b, p in zip(beta, part))
                cp = c.get(part)
                cr = c.get(rest)
                if cp and cr:
                    numerator += _dot(gcm, part, rest) * cp * cr
            denominator = _dot(gcm, beta, beta) - 2 * height
            if denominator == 0:
                assert numerator == 0, "Peterson recursion hit a zero pivot with nonzero sum"
                continue
            c_beta = numerator / denominator
            divisor_part = Fraction(0)
            for k in range(2, height + 1):
                if all(b % k == 0 for b in beta):
                    sub = tuple(b // k for b in beta)
                    divisor_part += Fraction(mult.get(sub, 0), k)
            m = c_beta - divisor_part
            assert m.denominator == 1 and m >= 0, f"non-integral root multiplicity at {beta}"
            if m:
                c[beta] = c_beta
                mult[beta] = int(m)
            elif c_beta:
                c[beta] = c_beta
    return sorted(((b, m) for b, m in mult.items() if m > 0), key=lambda t: (sum(t[0]), t[0]))


@dataclass(frozen=True)
class RootSystemData:
    """Symmetric GCM with its positive roots and multiplicities.

    ``cutoff`` is None for finite type, where the list is complete; otherwise
    roots are known up to that height and deeper queries must fail loudly.
    """

    gcm: GCM
    positive_roots: tuple[tuple[Coeffs, int], ...]
    finite: bool
    cutoff: int | None

    @property
    def rank(self) -> int:
        return len(self.gcm)


def root_multiplicities(gcm: GCM, cutoff: int = 1) -> RootSystemData:
    validate_gcm(gcm)
    if cutoff < 1:
        raise DomainError("height cutoff must be at least 1")
    if is_finite_type(gcm):
        return RootSystemData(gcm, tuple(_finite_positive_roots(gcm)), True, None)
    return RootSystemData(gcm, tuple(_peterson_roots(gcm, cutoff)), False, cutoff)


@dataclass(frozen=True)
class WeightSpec:
    """Highest weight given by the framing dimensions, target weight given by
    the drop in simple-root coordinates."""

    w: DimVector
    v: DimVector


class MultiplicitySession:
    """Freudenthal recursion with a per-session memo table."""

    def __init__(self, roots: RootSystemData, highest: Coeffs):
        if len(highest) != roots.rank:
            raise DomainError("highest weight has the wrong rank")
        self.roots = roots
        self.highest = highest
        self._memo: dict[Coeffs, int] = {(0,) * roots.rank: 1}

    def multiplicity(self, drop: Coeffs) -> int:
        if len(drop) != self.roots.rank:
            raise DomainError("weight drop has the wrong rank")
        if any(d < 0 for d in drop):
            return 0
        height = sum(drop)
        if not self.roots.finite and height > self.roots.cutoff:
            raise CutoffError(
                f"weight at height {height} exceeds the root cutoff {self.roots.cutoff}; "
                "rebuild the root system with a larger cutoff"
            )
        return self._mult(drop)

    def _mult(self, drop: Coeffs) -> int:
        cached = self._memo.get(drop)
        if cached is not None:
            return cached
        gcm = self.roots.gcm
        w = self.highest
        denominator = 2 * sum(d * (wi + 1) for d, wi in zip(drop, w)) - _dot(gcm, drop, drop)
        if denominator <= 0:
            self._memo[drop] = 0
            return 0
        total = 0
        for alpha, alpha_mult in self.roots.positive_roots:
            if any(a > d for a, d in zip(alpha, drop)):
                continue
            norm = _dot(gcm, alpha, alpha)
            lam_alpha = sum(a * wi for a, wi in zip(alpha, w))
            drop_alpha = _dot(gcm, drop, alpha)
            k = 1
            while True:
                shifted = tuple(d - k * a for d, a in zip(drop, alpha))
                if any(s < 0 for s in shifted):
                    break
                m = self._mult(shifted)
                if m:
                    total += alpha_mult * m * (lam_alpha - drop_alpha + k * norm)
                k += 1
        value = Fraction(2 * total, denominator)
        assert value.denominator == 1 and value >= 0, f"non-integral weight multiplicity at {drop}"
        self._memo[drop] = int(value)
        return int(value)


def weight_multiplicity(roots: RootSystemData, spec: WeightSpec) -> int:
    """Multiplicity of (highest weight) minus (drop in simple roots) in the
    integrable highest-weight module."""
    if spec.w.vertices != spec.v.vertices:
        raise DomainError("weight spec over mismatched vertex sets")
    session = MultiplicitySession(roots, spec.w.values)
    return session.multiplicity(spec.v.values)


DEFAULT_CUTOFF_SLACK = 8


def roots_for_quiver(q: Quiver, height: int) -> RootSystemData:
    if q.has_edge_loops:
        raise InvalidCartanError("quiver has edge loops; no Kac-Moody algebra attached here")
    return root_multiplicities(cartan_matrix(q), max(1, height))


def h_eigenvalue(q: Quiver, v: DimVector, w: DimVector, i: str) -> int:
    """w_i minus the Cartan pairing with v; agrees with the Euler
    characteristic of the complex against the simple at i (asserted)."""
    gcm = cartan_matrix(q)
    idx = q.index(i)
    value = w[i] - sum(gcm[idx][j] * v.values[j] for j in range(len(q.vertices)))
    via_chi = chi(q, DimVector.unit(q, i), DimVector.zero(q), v, w)
    assert value == via_chi, "H eigenvalue disagrees with the complex Euler characteristic"
    return value


def predicted_component_count(q: Quiver, v: DimVector, w: DimVector) -> int:
    """What the top-homology geometry would produce: the weight multiplicity
    at the drop v below the highest weight w."""
    roots = roots_for_quiver(q, v.total() + DEFAULT_CUTOFF_SLACK)
    return weight_multiplicity(roots, WeightSpec(w, v))
