"""Fusion ring data model: axioms, exact Frobenius-Perron dimensions,
subring enumeration, adjoint subring / universal grading, invertibles, and
detection of maximal-rank subring structure.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .scalars import (
    ExactnessError,
    QuadExt,
    charpoly,
    count_real_roots,
    factor_linear_quadratic,
    largest_real_root_bounds,
    quad_compare,
    quad_max,
)


class InvalidRingError(ValueError):
    """Raised when an operation requires a valid fusion ring."""


@dataclass(frozen=True)
class Violation:
    """One failed axiom, pinpointing the first offending indices."""

    axiom: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self):
        return f"{self.axiom} at {self.indices}: {self.detail}"


class FusionRing:
    """A based ring with nonnegative integer structure constants.

    N[i][j][k] is the multiplicity of X_k in X_i (x) X_j; basis index 0 is
    the unit.  The duality permutation is inferred from N[i][j][0], never
    taken on faith from a caller.  Instances are immutable.
    """

    __slots__ = ("rank", "labels", "N", "dual", "_valid")

    def __init__(self, labels: Sequence[str], N: Sequence[Sequence[Sequence[int]]]):
        n = len(labels)
        if n == 0:
            raise ValueError("empty basis")
        if len(N) != n or any(len(r) != n or any(len(c) != n for c in r) for r in N):
            raise ValueError("structure constants must be an n x n x n array")
        tensor = tuple(
            tuple(tuple(int(x) for x in row) for row in plane) for plane in N
        )
        # best-effort duality inference; validate() reports ambiguities
        dual = []
        for i in range(n):
            partners = [j for j in range(n) if tensor[i][j][0] != 0]
            dual.append(partners[0] if len(partners) == 1 else i)
        object.__setattr__(self, "rank", n)
        object.__setattr__(self, "labels", tuple(str(s) for s in labels))
        object.__setattr__(self, "N", tensor)
        object.__setattr__(self, "dual", tuple(dual))
        object.__setattr__(self, "_valid", None)

    def __setattr__(self, *args):
        raise AttributeError("FusionRing is immutable")

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return self.labels == other.labels and self.N == other.N

    def __hash__(self):
        return hash((self.labels, self.N))

    def __repr__(self):
        return f"FusionRing(rank={self.rank}, labels={self.labels})"

    # -- axioms

    def validate(self) -> list[Violation]:
        """Exhaustive axiom check; empty list means valid."""
        out: list[Violation] = []
        n, N = self.rank, self.N
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if N[i][j][k] < 0:
                        out.append(Violation("nonnegativity", (i, j, k), "negative"))
                        break
                else:
                    continue
                break
        for j in range(n):
            for k in range(n):
                if N[0][j][k] != (1 if j == k else 0):
                    out.append(
                        Violation("unit-law", (0, j, k), "left unit fails")
                    )
                    break
            else:
                continue
            break
        for i in range(n):
            for k in range(n):
                if N[i][0][k] != (1 if i == k else 0):
                    out.append(
                        Violation("unit-law", (i, 0, k), "right unit fails")
                    )
                    break
            else:
                continue
            break
        # duality normalization: each row i has exactly one j with
        # N[i][j][0] = 1, everything else 0
        for i in range(n):
            row = [self.N[i][j][0] for j in range(n)]
            ones = [j for j, v in enumerate(row) if v == 1]
            if len(ones) != 1 or sum(row) != 1:
                out.append(
                    Violation(
                        "duality-normalization",
                        (i,),
                        f"unit multiplicities {row}",
                    )
                )
                break
        dual = self.dual
        for i in range(n):
            if dual[dual[i]] != i or dual[0] != 0:
                out.append(
                    Violation("duality-involution", (i,), f"dual map {dual}")
                )
                break
        done = False
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    ok = (
                        N[i][j][k] == N[dual[i]][k][j] == N[k][dual[j]][i]
                    )
                    if not ok:
                        out.append(
                            Violation(
                                "frobenius-reciprocity",
                                (i, j, k),
                                f"{N[i][j][k]}, {N[dual[i]][k][j]}, "
                                f"{N[k][dual[j]][i]}",
                            )
                        )
                        done = True
                        break
                if done:
                    break
            if done:
                break
        done = False
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        lhs = sum(N[i][j][m] * N[m][k][l] for m in range(n))
                        rhs = sum(N[j][k][m] * N[i][m][l] for m in range(n))
                        if lhs != rhs:
                            out.append(
                                Violation(
                                    "associativity",
                                    (i, j, k, l),
                                    f"{lhs} != {rhs}",
                                )
                            )
                            done = True
                            break
                    if done:
                        break
                if done:
                    break
            if done:
                break
        return out

    @property
    def is_valid(self) -> bool:
        if self._valid is None:
            object.__setattr__(self, "_valid", not self.validate())
        return self._valid

    def require_valid(self):
        if not self.is_valid:
            raise InvalidRingError("; ".join(str(v) for v in self.validate()[:3]))

    @property
    def is_commutative(self) -> bool:
        n, N = self.rank, self.N
        return all(
            N[i][j][k] == N[j][i][k]
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(n)
        )

    # -- basic constructions

    def left_matrix(self, i: int) -> list[list[int]]:
        """Matrix of left multiplication by X_i: row j lists X_i (x) X_j in
        the basis."""
        return [list(self.N[i][j]) for j in range(self.rank)]

    def support(self, i: int, j: int) -> list[int]:
        return [k for k in range(self.rank) if self.N[i][j][k] > 0]

    def closure(self, seed: Sequence[int]) -> frozenset[int]:
        """Smallest basis subset containing the seed that is unital, closed
        under duals and under tensor supports."""
        cur = set(seed) | {0}
        cur.update(self.dual[i] for i in seed)
        while True:
            new = set(cur)
            for i in cur:
                for j in cur:
                    new.update(self.support(i, j))
            new.update(self.dual[i] for i in new)
            if new == cur:
                return frozenset(cur)
            cur = new


@dataclass(frozen=True)
class FPDims:
    """Frobenius-Perron dimensions, exact where the minimal polynomials stay
    within a quadratic tower and certified rational enclosures otherwise."""

    dims: tuple[QuadExt, ...]
    exact: tuple[bool, ...]
    bounds: tuple[Optional[tuple[Fraction, Fraction]], ...]

    @property
    def all_exact(self) -> bool:
        return all(self.exact)

    def require_exact(self):
        if not self.all_exact:
            raise ExactnessError("approximate Frobenius-Perron dimensions")

    def total(self) -> QuadExt:
        self.require_exact()
        out = QuadExt(0)
        for d in self.dims:
            out = out + d * d
        return out


@dataclass(frozen=True)
class MRData:
    """A detected maximal-rank subring and the forced extension data."""

    base: tuple[int, ...]
    extra: int
    kappa: int
    dims: tuple[int, ...]  # integer FP dims of the base basis, in base order
    a: int  # sum of squared base dims = FPdim of the subring

    def extra_dim(self) -> QuadExt:
        disc = self.kappa * self.kappa + 4 * self.a
        return (QuadExt(self.kappa) + QuadExt.sqrt(disc)) * Fraction(1, 2)


@dataclass(frozen=True)
class GradingData:
    """Universal grading at the ring level."""

    adjoint: frozenset[int]
    components: tuple[frozenset[int], ...]
    table: tuple[tuple[int, ...], ...]  # group law on component indices
    rank_one_components: tuple[int, ...]  # flagged per Lemma on fiber functors

    @property
    def group_order(self) -> int:
        return len(self.components)


def validate(ring: FusionRing) -> list[Violation]:
    return ring.validate()


def left_matrix(ring: FusionRing, i: int) -> list[list[int]]:
    return ring.left_matrix(i)


def fpdims(ring: FusionRing) -> FPDims:
    """Exact FP dimension of each basis element: the Perron root of its
    left-multiplication matrix."""
    ring.require_valid()
    dims: list[QuadExt] = []
    exact: list[bool] = []
    bounds: list[Optional[tuple[Fraction, Fraction]]] = []
    for i in range(ring.rank):
        poly = charpoly(ring.left_matrix(i))
        fact = factor_linear_quadratic(poly)
        residual_real_roots = 0
        if fact.residual.degree > 0:
            bound = Fraction(1 + max(abs(c) for c in fact.residual.coeffs))
            residual_real_roots = count_real_roots(fact.residual, -bound, bound)
        if residual_real_roots == 0:
            # any residual factor is a complex pair; the Perron root is
            # among the extracted roots
            real_roots = fact.all_roots()
            dims.append(quad_max(real_roots))
            exact.append(True)
            bounds.append(None)
        else:
            lo, hi = largest_real_root_bounds(poly, Fraction(1, 10**10))
            dims.append(QuadExt((lo + hi) / 2))
            exact.append(False)
            bounds.append((lo, hi))
    return FPDims(tuple(dims), tuple(exact), tuple(bounds))


def global_fpdim(ring: FusionRing) -> QuadExt:
    """Sum of squared FP dimensions; requires exact dims."""
    return fpdims(ring).total()


def subrings(ring: FusionRing, bound: int = 12) -> list[frozenset[int]]:
    """All unital, dual- and tensor-closed basis subsets, by closing every
    generator subset (each subring is the closure of itself, so nothing is
    missed)."""
    ring.require_valid()
    if ring.rank > bound:
        raise ValueError(f"rank {ring.rank} exceeds enumeration bound {bound}")
    found = {ring.closure(())}
    nonunit = [i for i in range(ring.rank) if i != 0]
    for r in range(1, len(nonunit) + 1):
        for gens in itertools.combinations(nonunit, r):
            found.add(ring.closure(gens))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subrings_bruteforce(ring: FusionRing) -> list[frozenset[int]]:
    """2^n test oracle: check closure axioms on every subset."""
    ring.require_valid()
    out = []
    nonunit = [i for i in range(ring.rank) if i != 0]
    for r in range(len(nonunit) + 1):
        for extra in itertools.combinations(nonunit, r):
            s = frozenset((0,) + extra)
            if any(ring.dual[i] not in s for i in s):
                continue
            if all(set(ring.support(i, j)) <= s for i in s for j in s):
                out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def detect_mr(ring: FusionRing) -> Optional[MRData]:
    """Find a rank-(n-1) subring and verify the forced fusion rules of the
    extension: X_n (x) X_i = d_i X_n and X_n (x) X_n = sum d_i X_i + kappa X_n."""
    ring.require_valid()
    n = ring.rank
    for sub in subrings(ring):
        if len(sub) != n - 1:
            continue
        (extra,) = set(range(n)) - sub
        if ring.dual[extra] != extra:
            raise InvalidRingError("maximal-rank extension with non-self-dual extra")
        base = tuple(sorted(sub))
        d = []
        for i in base:
            di = ring.N[extra][i][extra]
            for k in range(n):
                want = di if k == extra else 0
                if ring.N[extra][i][k] != want or ring.N[i][extra][k] != want:
                    raise InvalidRingError(
                        f"forced rule X_n*X_{i} = d_i X_n violated at k={k}"
                    )
            if di < 1:
                raise InvalidRingError(f"non-positive forced dimension d_{i}={di}")
            d.append(di)
        for pos, i in enumerate(base):
            if ring.N[extra][extra][i] != d[pos]:
                raise InvalidRingError("X_n*X_n decomposition disagrees with d_i")
        kappa = ring.N[extra][extra][extra]
        return MRData(base, extra, kappa, tuple(d), sum(x * x for x in d))
    return None


def adjoint_and_grading(ring: FusionRing) -> GradingData:
    """Adjoint subring (closure of all X (x) X^*) and the universal grading
    it induces; components of rank 1 are flagged."""
    ring.require_valid()
    n = ring.rank
    adjoint = ring.closure(
        [k for i in range(n) for k in ring.support(i, ring.dual[i])]
    )

    def related(i: int, j: int) -> bool:
        return any(k in adjoint for k in ring.support(i, ring.dual[j]))

    components: list[set[int]] = []
    for i in range(n):
        for comp in components:
            rep = next(iter(comp))
            if related(i, rep):
                comp.add(i)
                break
        else:
            components.append({i})
    comps = sorted((frozenset(c) for c in components), key=lambda c: (0 not in c, sorted(c)))
    if comps[0] != adjoint:
        raise InvalidRingError("unit component differs from the adjoint subring")
    index_of = {}
    for ci, comp in enumerate(comps):
        for i in comp:
            index_of[i] = ci
    table = []
    for ca in comps:
        row = []
        for cb in comps:
            targets = {
                index_of[k]
                for i in ca
                for j in cb
                for k in ring.support(i, j)
            }
            if len(targets) != 1:
                raise InvalidRingError("grading components do not multiply to one component")
            row.append(targets.pop())
        table.append(tuple(row))
    # group sanity: unit row/column, and each row/column a permutation
    if any(table[0][c] != c or table[c][0] != c for c in range(len(comps))):
        raise InvalidRingError("grading table has no unit")
    for row in table:
        if sorted(row) != list(range(len(comps))):
            raise InvalidRingError("grading table is not a group table")
    dims = fpdims(ring)
    if dims.all_exact:
        totals = []
        for comp in comps:
            t = QuadExt(0)
            for i in comp:
                t = t + dims.dims[i] * dims.dims[i]
            totals.append(t)
        if any(t != totals[0] for t in totals[1:]):
            raise InvalidRingError("graded components have unequal FP dimension")
    rank_one = tuple(ci for ci, comp in enumerate(comps) if len(comp) == 1 and ci != 0)
    return GradingData(adjoint, tuple(comps), tuple(table), rank_one)


@dataclass(frozen=True)
class InvertibleGroup:
    elements: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]  # products as basis indices
    fixes_extra: Optional[bool]  # every invertible fixes X_n, when MR


def invertibles(ring: FusionRing, mr: Optional[MRData] = None) -> InvertibleGroup:
    """Group of basis elements with X (x) X^* = 1 exactly."""
    ring.require_valid()
    n = ring.rank
    elems = []
    for i in range(n):
        if all(
            ring.N[i][ring.dual[i]][k] == (1 if k == 0 else 0) for k in range(n)
        ):
            elems.append(i)
    table = []
    for g in elems:
        row = []
        for h in elems:
            supp = ring.support(g, h)
            if len(supp) != 1 or supp[0] not in elems:
                raise InvalidRingError("invertibles are not closed")
            row.append(supp[0])
        table.append(tuple(row))
    fixes = None
    if mr is not None:
        fixes = all(
            ring.N[g][mr.extra][k] == (1 if k == mr.extra else 0)
            for g in elems
            for k in range(n)
        )
    return InvertibleGroup(tuple(elems), tuple(table), fixes)


def sort_key(dim: QuadExt):
    """Deterministic sort key for exact dims (ascending)."""
    return functools.cmp_to_key(quad_compare)(dim)
