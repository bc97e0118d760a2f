"""S-matrices from the balancing equation, centralizers, and degeneracy.

Given a fusion ring with categorical dimensions and ribbon twists, the
S-matrix entry for a pair of objects is

    s_{X,Y} = theta_X^-1 * theta_Y^-1 * sum_Z N_{XY}^Z * theta_Z * d_Z,

computed exactly over a common cyclotomic field.  On top of it this module
computes centralizers of subsets (objects whose S-entries against the
subset factor as products of dimensions), classifies the degeneracy of the
whole ring, and runs the row-degeneracy argument ruling out a trivial twist
on an invertible that fixes the corank-one extra object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .mr import MRData
from .ring import FusionRing, invertibles
from .scalars import (
    CycNumber,
    QuadExt,
    RationalLike,
    UnsupportedFieldError,
    embed_quadratic,
)

NON_DEGENERATE = "non-degenerate"
SLIGHTLY_DEGENERATE = "slightly-degenerate"
SYMMETRIC = "symmetric"
PROPERLY_DEGENERATE = "properly-degenerate"

ScalarLike = "CycNumber | QuadExt | RationalLike"


def _to_cyc(x, order_hint: int = 1) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    if isinstance(x, QuadExt):
        if x.is_rational:
            return CycNumber.from_rational(x.as_fraction())
        if x.D == 5:
            return embed_quadratic(x, 5)
        raise UnsupportedFieldError(
            f"cannot mix sqrt({x.D}) values into a cyclotomic S-matrix"
        )
    return CycNumber.from_rational(x, order_hint)


def _is_root_of_unity(x: CycNumber) -> bool:
    if x.is_zero:
        return False
    return (x ** (2 * x.order)) == 1


@dataclass(frozen=True)
class PremodularData:
    """A fusion ring with exact dimensions, twists, and its S-matrix."""

    ring: FusionRing
    dims: tuple[CycNumber, ...]
    twists: tuple[CycNumber, ...]
    S: tuple[tuple[CycNumber, ...], ...]


def smatrix(
    ring: FusionRing,
    dims: Sequence[ScalarLike],
    twists: Sequence[ScalarLike],
) -> list[list[CycNumber]]:
    """S-matrix by the balancing equation, entry-wise and exact.

    Dimensions must be multiplicative against the fusion rules and twists
    must be roots of unity with a trivial twist on the unit; both are
    verified.  Quadratic irrational dimensions are supported only for the
    golden field (sqrt 5); other fields raise UnsupportedFieldError.
    """
    n = ring.rank
    d = [_to_cyc(x) for x in dims]
    t = [_to_cyc(x) for x in twists]
    if len(d) != n or len(t) != n:
        raise ValueError("dims and twists must have one entry per basis element")
    if t[0] != 1:
        raise ValueError("twist of the unit must be 1")
    if d[0] != 1:
        raise ValueError("dimension of the unit must be 1")
    for i, tw in enumerate(t):
        if not _is_root_of_unity(tw):
            raise ValueError(f"twist {i} is not a root of unity")
    for i in range(n):
        for j in range(n):
            acc = CycNumber.from_rational(0)
            for k in range(n):
                acc = acc + ring.N[i][j][k] * d[k]
            if acc != d[i] * d[j]:
                raise ValueError(
                    f"dimensions are not multiplicative at ({i}, {j})"
                )
    S: list[list[CycNumber]] = []
    for i in range(n):
        row: list[CycNumber] = []
        ti = t[i].inverse()
        for j in range(n):
            acc = CycNumber.from_rational(0)
            for k in range(n):
                if ring.N[i][j][k]:
                    acc = acc + ring.N[i][j][k] * (t[k] * d[k])
            row.append(ti * t[j].inverse() * acc)
        S.append(row)
    return S


def premodular_data(
    ring: FusionRing,
    dims: Sequence[ScalarLike],
    twists: Sequence[ScalarLike],
) -> PremodularData:
    S = smatrix(ring, dims, twists)
    return PremodularData(
        ring,
        tuple(_to_cyc(x) for x in dims),
        tuple(_to_cyc(x) for x in twists),
        tuple(tuple(row) for row in S),
    )


def centralizer_of(data: PremodularData, subset: Iterable[int]) -> frozenset[int]:
    """Objects whose S-entries against `subset` factor as d_X * d_Y.

    The result is verified to be closed under duals and fusion; a failure
    would mean the input data is not consistent and raises ValueError.
    """
    ring = data.ring
    idx = sorted(set(subset))
    out = frozenset(
        y
        for y in range(ring.rank)
        if all(data.S[x][y] == data.dims[x] * data.dims[y] for x in idx)
    )
    for y in out:
        if ring.dual[y] not in out:
            raise ValueError(f"centralizer is not dual-closed at {y}")
    for a in out:
        for b in out:
            for k in range(ring.rank):
                if ring.N[a][b][k] and k not in out:
                    raise ValueError(
                        f"centralizer is not tensor-closed at ({a}, {b})"
                    )
    return out


def _det(M: list[list[CycNumber]]) -> CycNumber:
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = CycNumber.from_rational(0)
    sign = 1
    for c in range(n):
        minor = [
            [M[r][cc] for cc in range(n) if cc != c] for r in range(1, n)
        ]
        acc = acc + sign * (M[0][c] * _det(minor))
        sign = -sign
    return acc


@dataclass(frozen=True)
class DegeneracyReport:
    """Degeneracy classification of the whole ring.

    `label` is one of the four class constants; `center` is the
    centralizer of the full basis; `svec_center` marks a rank-2 center
    generated by an invertible with twist -1.
    """

    label: str
    center: frozenset[int]
    svec_center: bool


def degeneracy_class(data: PremodularData) -> DegeneracyReport:
    """Classify by the centralizer of everything.

    Trivial center with invertible S-matrix is non-degenerate; the full
    basis is symmetric; a proper rank-2 center whose nontrivial object is
    an invertible with twist -1 is slightly degenerate; anything else is
    properly degenerate.
    """
    n = data.ring.rank
    center = centralizer_of(data, range(n))
    svec = len(center) == 2 and any(
        data.twists[i] == -1 and data.dims[i] ** 2 == 1
        for i in center
        if i != 0
    )
    if center == frozenset({0}):
        det = _det([list(row) for row in data.S])
        if not det.is_zero:
            return DegeneracyReport(NON_DEGENERATE, center, False)
        return DegeneracyReport(PROPERLY_DEGENERATE, center, False)
    if len(center) == n:
        return DegeneracyReport(SYMMETRIC, center, svec)
    if svec:
        return DegeneracyReport(SLIGHTLY_DEGENERATE, center, True)
    return DegeneracyReport(PROPERLY_DEGENERATE, center, False)


@dataclass(frozen=True)
class RowComparison:
    """S-matrix row of an invertible fixing the extra object vs the unit."""

    g: int
    twist_is_one: bool
    rows_equal: bool
    first_difference: Optional[int]
    trivial: bool


@dataclass(frozen=True)
class TannakianReport:
    comparisons: tuple[RowComparison, ...]
    degenerate: bool
    message: Optional[str]


def tannakian_row_obstruction(
    data: PremodularData, mr: MRData
) -> TannakianReport:
    """Row-degeneracy argument against a trivial twist on a fixing invertible.

    For each invertible g with g tensor X_n = X_n, the balancing equation
    collapses s_{g,X_n} to theta_g^-1 * d_{X_n}; with theta_g = 1 the whole
    S-row of g equals the row of the unit, so the S-matrix is degenerate
    and the pointed part cannot be Tannakian.  The unit itself is reported
    as a trivial witness.
    """
    if mr is None:
        raise ValueError("corank-one structure is required")
    ring = data.ring
    extra = mr.extra
    group = invertibles(ring, mr)
    comparisons: list[RowComparison] = []
    degenerate = False
    for g in group.elements:
        if ring.N[g][extra][extra] != 1:
            continue
        theta_one = data.twists[g] == 1
        diff = None
        for j in range(ring.rank):
            if data.S[g][j] != data.S[0][j]:
                diff = j
                break
        equal = diff is None
        trivial = g == 0
        if equal and theta_one and not trivial:
            degenerate = True
        comparisons.append(
            RowComparison(g, theta_one, equal, diff, trivial)
        )
    message = (
        "S degenerate: C_pt cannot be Tannakian" if degenerate else None
    )
    return TannakianReport(tuple(comparisons), degenerate, message)
