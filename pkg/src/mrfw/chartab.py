"""Character tables over cyclotomic fields and the two-class nonvanishing
criterion.

A finite group whose representation ring contains a corank-one based subring
is exactly a group with an irreducible character vanishing outside two
conjugacy classes.  This module ingests exact character tables, rebuilds the
fusion ring of representations from them, and checks both sides of that
equivalence independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .ring import FusionRing, detect_mr, validate
from .scalars import CycNumber, RationalLike

CycLike = "CycNumber | RationalLike"


def _as_cyc(x: CycNumber | RationalLike) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    return CycNumber.from_rational(x)


@dataclass(frozen=True)
class CharacterTable:
    """Exact character table of a finite group.

    Rows are irreducible characters, columns are conjugacy classes, and
    column 0 is the class of the identity.  All values are cyclotomic
    numbers; the constructor coerces plain rationals.
    """

    order: int
    class_sizes: tuple[int, ...]
    characters: tuple[tuple[CycNumber, ...], ...]
    name: str = ""
    inverse_perm: Optional[tuple[int, ...]] = None

    def __init__(
        self,
        order: int,
        class_sizes: Sequence[int],
        characters: Sequence[Sequence[CycNumber | RationalLike]],
        name: str = "",
        inverse_perm: Optional[Sequence[int]] = None,
    ):
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "class_sizes", tuple(int(s) for s in class_sizes))
        object.__setattr__(
            self,
            "characters",
            tuple(tuple(_as_cyc(v) for v in row) for row in characters),
        )
        object.__setattr__(self, "name", name)
        object.__setattr__(
            self,
            "inverse_perm",
            None if inverse_perm is None else tuple(int(i) for i in inverse_perm),
        )

    @property
    def k(self) -> int:
        """Number of conjugacy classes (= number of irreducible characters)."""
        return len(self.class_sizes)

    @property
    def centralizer_orders(self) -> tuple[int, ...]:
        return tuple(self.order // s for s in self.class_sizes)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(row[0].as_fraction()) for row in self.characters)


def class_inverse_permutation(t: CharacterTable) -> tuple[int, ...]:
    """Permutation sending each class to the class of inverse elements.

    Inferred from the identity chi(g^-1) = conj(chi(g)): the inverse class
    of column j is the unique column matching the conjugated column j in
    every character.  An explicit permutation stored on the table wins.
    """
    if t.inverse_perm is not None:
        return t.inverse_perm
    k = t.k
    perm: list[int] = []
    for j in range(k):
        target = [t.characters[i][j].conjugate() for i in range(k)]
        matches = [
            m
            for m in range(k)
            if all(t.characters[i][m] == target[i] for i in range(k))
        ]
        if len(matches) != 1:
            raise ValueError(
                f"class {j} has {len(matches)} inverse-class candidates"
            )
        perm.append(matches[0])
    return tuple(perm)


def validate_table(t: CharacterTable) -> list[str]:
    """Check the defining identities of a character table exactly.

    Returns a list of violation messages, empty when the table is
    consistent.  Each message names the first pair of rows or columns
    witnessing the failure of that identity.
    """
    problems: list[str] = []
    k = t.k
    if sum(t.class_sizes) != t.order:
        problems.append(
            f"class sizes sum to {sum(t.class_sizes)}, group order is {t.order}"
        )
    for j, s in enumerate(t.class_sizes):
        if s <= 0 or t.order % s != 0:
            problems.append(f"class {j} size {s} does not divide order {t.order}")
    if len(t.characters) != k or any(len(row) != k for row in t.characters):
        problems.append("character matrix is not square of size k")
        return problems
    if t.class_sizes[0] != 1:
        problems.append("column 0 must be the identity class of size 1")
    if any(v != 1 for v in t.characters[0]):
        problems.append("first row is not the trivial character")
    degs: list[Fraction] = []
    for i, row in enumerate(t.characters):
        v = row[0]
        if not v.is_rational or v.as_fraction().denominator != 1 or v.as_fraction() <= 0:
            problems.append(f"degree of character {i} is not a positive integer")
            return problems
        degs.append(v.as_fraction())
    if sum(d * d for d in degs) != t.order:
        problems.append("sum of squared degrees does not equal the group order")
    for i in range(k):
        for j in range(i, k):
            acc = CycNumber.from_rational(0)
            for c in range(k):
                acc = acc + t.class_sizes[c] * (
                    t.characters[i][c] * t.characters[j][c].conjugate()
                )
            want = t.order if i == j else 0
            if acc != want:
                problems.append(
                    f"row orthogonality fails for characters ({i}, {j})"
                )
    for c in range(k):
        for d in range(c, k):
            acc = CycNumber.from_rational(0)
            for i in range(k):
                acc = acc + t.characters[i][c] * t.characters[i][d].conjugate()
            want = t.order // t.class_sizes[c] if c == d else 0
            if acc != want:
                problems.append(
                    f"column orthogonality fails for classes ({c}, {d})"
                )
    return problems


def fusion_from_table(t: CharacterTable) -> FusionRing:
    """Fusion ring of representations, from characters alone.

    The multiplicity of the k-th irreducible in the product of the i-th and
    j-th is the inner product of chi_i*chi_j with chi_k, a class-size
    weighted sum divided by the group order.  Any non-integer multiplicity
    means the table is inconsistent and raises ValueError.
    """
    kcount = t.k
    inv = Fraction(1, t.order)
    N: list[list[list[int]]] = []
    for i in range(kcount):
        plane: list[list[int]] = []
        for j in range(kcount):
            row: list[int] = []
            for m in range(kcount):
                acc = CycNumber.from_rational(0)
                for c in range(kcount):
                    acc = acc + t.class_sizes[c] * (
                        t.characters[i][c]
                        * t.characters[j][c]
                        * t.characters[m][c].conjugate()
                    )
                val = acc * inv
                if not val.is_rational:
                    raise ValueError(
                        f"multiplicity ({i}, {j}, {m}) is irrational"
                    )
                f = val.as_fraction()
                if f.denominator != 1 or f < 0:
                    raise ValueError(
                        f"multiplicity ({i}, {j}, {m}) = {f} is not a "
                        "nonnegative integer"
                    )
                row.append(int(f))
            plane.append(row)
        N.append(plane)
    labels = [f"chi{i + 1}" for i in range(kcount)]
    ring = FusionRing(labels, N)
    report = validate(ring)
    if report:
        raise ValueError(f"table induces an invalid fusion ring: {report[0]}")
    return ring


@dataclass(frozen=True)
class GagolaWitness:
    """Character vanishing outside exactly two conjugacy classes."""

    char_index: int
    nonvanishing_classes: tuple[int, int]


def gagola_condition(t: CharacterTable) -> Optional[GagolaWitness]:
    """First character (by row order) nonzero on exactly two classes."""
    for i, row in enumerate(t.characters):
        support = tuple(j for j, v in enumerate(row) if not v.is_zero)
        if len(support) == 2:
            return GagolaWitness(i, (support[0], support[1]))
    return None


@dataclass(frozen=True)
class GagolaReport:
    """Both sides of the two-class criterion, computed independently.

    `witness` is the character-theoretic side; `mr_basis` is the
    ring-theoretic side (the corank-one based subring of the fusion ring,
    when present).  `kernel_classes` is the common kernel of the
    non-witness characters, as a set of class indices; on a positive
    instance it is exactly the witness support.
    """

    witness: Optional[GagolaWitness]
    mr_basis: Optional[tuple[int, ...]]
    kernel_classes: Optional[frozenset[int]]
    holds: bool


def _kernel_classes(t: CharacterTable, skip: int) -> frozenset[int]:
    """Classes on which every character except row `skip` takes its degree."""
    keep: set[int] = set()
    for c in range(t.k):
        if all(
            t.characters[i][c] == t.characters[i][0]
            for i in range(t.k)
            if i != skip
        ):
            keep.add(c)
    return frozenset(keep)


def theorem57_check(t: CharacterTable) -> GagolaReport:
    """Verify the equivalence: corank-one subring iff two-class character.

    Both sides are computed independently; disagreement raises ValueError,
    since it would falsify either the equivalence or the input table.  On a
    positive instance the structural picture behind the equivalence is also
    verified: the non-witness characters share a kernel N whose nonidentity
    elements form a single conjugacy class, the witness is supported on
    exactly {identity} and that class, and |N| matches.
    """
    if t.order <= 2:
        raise ValueError("criterion requires group order > 2")
    bad = validate_table(t)
    if bad:
        raise ValueError(f"invalid table: {bad[0]}")
    witness = gagola_condition(t)
    ring = fusion_from_table(t)
    mr = detect_mr(ring)
    gagola_holds = witness is not None
    mr_holds = mr is not None
    if gagola_holds != mr_holds:
        raise ValueError(
            "two-class criterion and corank-one subring detection disagree: "
            f"witness={witness}, mr={mr}"
        )
    if witness is None:
        return GagolaReport(None, None, None, False)
    assert mr is not None
    kernel = _kernel_classes(t, witness.char_index)
    if kernel != frozenset(witness.nonvanishing_classes):
        raise ValueError(
            "common kernel of the complementary characters does not match "
            f"the witness support: {sorted(kernel)} vs "
            f"{witness.nonvanishing_classes}"
        )
    if 0 not in kernel:
        raise ValueError("kernel does not contain the identity class")
    n_order = sum(t.class_sizes[c] for c in kernel)
    if t.order % n_order != 0:
        raise ValueError(
            f"kernel subgroup order {n_order} does not divide {t.order}"
        )
    if mr.extra != witness.char_index:
        raise ValueError(
            "subring complement and witness character disagree: "
            f"extra={mr.extra}, witness={witness.char_index}"
        )
    return GagolaReport(witness, mr.base, kernel, True)
