"""Exact arithmetic kernel: rationals, real quadratic irrationals, cyclotomic
numbers and integer polynomials.

Every value is immutable and every operation is pure.  No floating point is
used anywhere; approximate answers (when an exact one is out of reach) are
certified rational enclosures produced by Sturm-sequence bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction]


class UnsupportedFieldError(ValueError):
    """Raised when an operation would mix incompatible number fields."""


class ExactnessError(ArithmeticError):
    """Raised when a computation that must stay exact would have to
    approximate."""


# ---------------------------------------------------------------------------
# square-free decomposition


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = c^2 * D with D squarefree.  Requires n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    c, d = 1, 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            c *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return c, d


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


# ---------------------------------------------------------------------------
# quadratic field elements


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational value: {x!r}")


class QuadExt:
    """An element p + q*sqrt(D) of a real quadratic field.

    D is kept squarefree; purely rational values are normalized to D = 1,
    q = 0 so equality is structural.
    """

    __slots__ = ("p", "q", "D")

    def __init__(self, p: RationalLike, q: RationalLike = 0, D: int = 1):
        p = _as_fraction(p)
        q = _as_fraction(q)
        if D < 1:
            raise ValueError("radicand must be positive")
        if q == 0 or D == 1:
            # sqrt(1) = 1 folds into the rational part
            if D == 1:
                p, q = p + q, Fraction(0)
            q = Fraction(0) if q == 0 else q
            if q == 0:
                D = 1
        else:
            c, d = squarefree_decompose(D)
            if d == 1:
                p, q, D = p + q * c, Fraction(0), 1
            else:
                q, D = q * c, d
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "D", D)

    def __setattr__(self, *args):
        raise AttributeError("QuadExt is immutable")

    # -- constructors

    @classmethod
    def sqrt(cls, n: int) -> "QuadExt":
        """Exact square root of a nonnegative integer."""
        c, d = squarefree_decompose(n)
        if d == 1:
            return cls(c)
        return cls(0, c, d)

    # -- predicates

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise UnsupportedFieldError(f"{self} is irrational")
        return self.p

    def is_algebraic_integer(self) -> bool:
        if self.q == 0:
            return self.p.denominator == 1
        tr = 2 * self.p
        nrm = self.p * self.p - self.q * self.q * self.D
        return tr.denominator == 1 and nrm.denominator == 1

    # -- field structure

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.p, -self.q, self.D)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.D

    def trace(self) -> Fraction:
        return 2 * self.p

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if self.q != 0 and other.q != 0 and self.D != other.D:
                raise UnsupportedFieldError(
                    f"mixed radicands sqrt({self.D}) and sqrt({other.D})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self.D if self.q != 0 else o.D
        return QuadExt(self.p + o.p, self.q + o.q, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self.D if self.q != 0 else o.D
        return QuadExt(
            self.p * o.p + self.q * o.q * D,
            self.p * o.q + self.q * o.p,
            D,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero or degenerate quadratic element")
        return QuadExt(self.p / n, -self.q / n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExt(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- ordering (real embedding with sqrt(D) > 0)

    def _sign(self) -> int:
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # mixed signs: compare p^2 and q^2 D
        lhs, rhs = p * p, q * q * self.D
        if lhs == rhs:
            return 0
        big_is_rational = lhs > rhs
        return (1 if p > 0 else -1) if big_is_rational else (1 if q > 0 else -1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.D == other.D

    def __hash__(self):
        return hash((self.p, self.q, self.D))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def enclosure(self, scale: int = 32) -> tuple[Fraction, Fraction]:
        """Rational bounds lo <= self <= hi with hi - lo <= |q| / 2^scale."""
        if self.q == 0:
            return self.p, self.p
        s = math.isqrt(self.D << (2 * scale))
        lo_rt = Fraction(s, 1 << scale)
        hi_rt = Fraction(s + 1, 1 << scale)
        if self.q > 0:
            return self.p + self.q * lo_rt, self.p + self.q * hi_rt
        return self.p + self.q * hi_rt, self.p + self.q * lo_rt

    def __repr__(self):
        if self.q == 0:
            return f"QuadExt({self.p})"
        return f"QuadExt({self.p} + {self.q}*sqrt({self.D}))"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.D})"


ExactScalar = Union[Fraction, QuadExt]


def exact_to_quad(x: "ExactScalar | int") -> QuadExt:
    if isinstance(x, QuadExt):
        return x
    return QuadExt(x)


def quad_compare(a: QuadExt, b: QuadExt) -> int:
    """Total order on real quadratic numbers, even across different fields.

    Same-field (or rational) comparisons are exact sign computations; the
    cross-field case separates certified rational enclosures, which always
    terminates because two irrationals from distinct squarefree radicands
    can only coincide when both are rational.
    """
    if a.q == 0 or b.q == 0 or a.D == b.D:
        return (a - b)._sign()
    scale = 16
    while True:
        alo, ahi = a.enclosure(scale)
        blo, bhi = b.enclosure(scale)
        if ahi < blo:
            return -1
        if bhi < alo:
            return 1
        scale *= 2


def quad_max(values: Iterable[QuadExt]) -> QuadExt:
    it = iter(values)
    best = next(it)
    for v in it:
        if quad_compare(v, best) > 0:
            best = v
    return best


# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.degree >= 0 and self.coeffs[-1] == 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    def deflate_root(self, r: Fraction) -> "IntPoly":
        """Divide by (x - r); r must be an exact root."""
        quotient: list[Fraction] = []
        rem = Fraction(0)
        for c in reversed(self.coeffs):
            rem = rem * r + c
            quotient.append(rem)
        if quotient.pop() != 0:
            raise ValueError(f"{r} is not a root")
        quotient.reverse()
        out = []
        for c in quotient:
            if c.denominator != 1:
                raise ValueError("non-integer deflation")
            out.append(c.numerator)
        return IntPoly(out)

    def divexact(self, other: "IntPoly") -> "IntPoly":
        """Exact division by a monic divisor."""
        if not other.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = other.degree
        out = [0] * max(len(rem) - d, 1)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                out[i - d] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] -= c * oc
        if any(rem):
            raise ValueError("division is not exact")
        return IntPoly(out)

    def mat_eval(self, M: Sequence[Sequence[int]]) -> list[list[int]]:
        """Evaluate at a square integer matrix (for Cayley-Hamilton checks)."""
        n = len(M)
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        out = [[0] * n for _ in range(n)]
        power = ident
        for k, c in enumerate(self.coeffs):
            if k > 0:
                power = _mat_mul(power, M)
            if c:
                for i in range(n):
                    for j in range(n):
                        out[i][j] += c * power[i][j]
        return out

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and self.degree >= 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return " + ".join(terms) if terms else "0"


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(p):
                    row[j] += a * Bk[j]
    return out


def charpoly(M: Sequence[Sequence[int]]) -> IntPoly:
    """Characteristic polynomial det(xI - M) via the Faddeev-LeVerrier
    recurrence, exact over the rationals."""
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("matrix must be square")
    # the recurrence stays inside the integers: every c_k is a coefficient
    # of the characteristic polynomial, so the division by k is exact
    cs: list[int] = [1] + [0] * n  # cs[k] = coeff of x^(n-k)
    A = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # A <- M(A + c_{k-1} I)
        B = [row[:] for row in A]
        for i in range(n):
            B[i][i] += cs[k - 1]
        A = _mat_mul(M, B)
        t = sum(A[i][i] for i in range(n))
        q, r = divmod(-t, k)
        if r:
            raise ArithmeticError("charpoly produced a non-integer coefficient")
        cs[k] = q
    # lowest degree first: coeff of x^j is cs[n-j]
    return IntPoly([cs[k] for k in range(n, -1, -1)])


@dataclass(frozen=True)
class Factorization:
    """Partial factorization of a monic integer polynomial into rational
    roots, irreducible monic quadratics, and an untouched residual."""

    roots: tuple[Fraction, ...]
    quadratics: tuple[IntPoly, ...]
    residual: IntPoly

    def all_roots(self) -> list[QuadExt]:
        """Roots of the fully-factored part, as exact quadratic numbers."""
        out: list[QuadExt] = [QuadExt(r) for r in self.roots]
        for quad in self.quadratics:
            c, b, _ = quad.coeffs
            disc = b * b - 4 * c
            if disc < 0:
                continue  # complex pair; no real embedding
            root = QuadExt.sqrt(disc)
            out.append((QuadExt(-b) + root) * Fraction(1, 2))
            out.append((QuadExt(-b) - root) * Fraction(1, 2))
        return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.update((d, n // d))
    return sorted(out)


def factor_linear_quadratic(p: IntPoly) -> Factorization:
    """Split off rational roots and quadratic factors of a monic integer
    polynomial.  Anything of degree > 2 that resists is returned as the
    residual, untouched."""
    if not p.is_monic:
        raise ValueError("polynomial must be monic")
    roots: list[Fraction] = []
    work = p
    # strip x^k
    while work.degree > 0 and work.coeffs[0] == 0:
        roots.append(Fraction(0))
        work = IntPoly(work.coeffs[1:])
    # integer roots of a monic polynomial divide the constant term
    changed = True
    while changed and work.degree > 0:
        changed = False
        const = work.coeffs[0]
        for d in _divisors(const):
            for cand in (d, -d):
                if work(cand) == 0:
                    roots.append(Fraction(cand))
                    work = work.deflate_root(Fraction(cand))
                    changed = True
                    break
            if changed:
                break
        if work.degree > 0 and work.coeffs[0] == 0:
            roots.append(Fraction(0))
            work = IntPoly(work.coeffs[1:])
            changed = True
    quadratics: list[IntPoly] = []
    if work.degree == 2:
        quadratics.append(work)
        work = IntPoly([1])
    roots.sort()
    return Factorization(tuple(roots), tuple(quadratics), work)


# ---------------------------------------------------------------------------
# Sturm sequences (certified enclosures for the occasional inexact path)


def _frac_poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        off = len(a) - len(b)
        for i, c in enumerate(b):
            a[off + i] -= f * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    p0 = [Fraction(c) for c in p.coeffs]
    p1 = [Fraction(k * c) for k, c in enumerate(p.coeffs)][1:]
    chain = [p0, p1]
    while chain[-1]:
        rem = _frac_poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = Fraction(0)
        for c in reversed(poly):
            v = v * x + c
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    chain = _sturm_chain(p)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def largest_real_root_bounds(
    p: IntPoly, width: Fraction = Fraction(1, 10**12)
) -> tuple[Fraction, Fraction]:
    """Certified enclosure (lo, hi] of the largest real root of a monic
    integer polynomial, by Sturm bisection."""
    if not p.is_monic:
        raise ValueError("polynomial must be monic")
    chain = _sturm_chain(p)
    bound = Fraction(1 + max(abs(c) for c in p.coeffs))
    lo, hi = -bound, bound

    def roots_above(x: Fraction) -> int:
        return _sign_changes(chain, x) - _sign_changes(chain, hi)

    if roots_above(lo) == 0:
        raise ValueError("polynomial has no real roots")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if roots_above(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """n-th cyclotomic polynomial, by recursive division of x^n - 1."""
    if n < 1:
        raise ValueError("order must be positive")
    poly = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = poly.divexact(cyclotomic_polynomial(d))
    return poly


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n).coeffs
    d = len(phi) - 1
    work = coeffs[:]
    for i in range(len(work) - 1, d - 1, -1):
        c = work[i]
        if c:
            for j in range(d + 1):
                work[i - d + j] -= c * phi[j]
    work = work[:d] + [Fraction(0)] * max(0, d - len(work))
    return tuple(work[:d])


class CycNumber:
    """An element of Q(zeta_n), stored as the canonical representative of a
    polynomial in zeta_n modulo the n-th cyclotomic polynomial."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[RationalLike]):
        cs = [_as_fraction(c) for c in coeffs]
        d = cyclotomic_polynomial(order).degree
        if len(cs) > d:
            # fold zeta^n = 1 first, then reduce mod Phi_n
            folded = [Fraction(0)] * order
            for k, c in enumerate(cs):
                folded[k % order] += c
            cs = folded
        cs = list(_reduce_mod_phi(cs, order))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("CycNumber is immutable")

    # -- constructors

    @classmethod
    def from_rational(cls, x: RationalLike, order: int = 1) -> "CycNumber":
        return cls(order, [_as_fraction(x)] + [Fraction(0)] * 0)

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "CycNumber":
        power %= order
        cs = [Fraction(0)] * (power + 1)
        cs[power] = Fraction(1)
        return cls(order, cs)

    # -- structure

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise UnsupportedFieldError(f"{self!r} is irrational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def lift(self, order: int) -> "CycNumber":
        """Re-express in Q(zeta_order); self.order must divide order."""
        if order == self.order:
            return self
        if order % self.order:
            raise UnsupportedFieldError("target order must be a multiple")
        step = order // self.order
        cs = [Fraction(0)] * order
        for k, c in enumerate(self.coeffs):
            cs[(k * step) % order] += c
        return CycNumber(order, cs)

    def _common(self, other: "CycNumber") -> tuple["CycNumber", "CycNumber"]:
        n = math.lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def _coerce(self, other) -> "CycNumber | None":
        if isinstance(other, CycNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, [_as_fraction(other)])
        return None

    # -- arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        n = max(len(a.coeffs), len(b.coeffs))
        cs = [
            (a.coeffs[i] if i < len(a.coeffs) else Fraction(0))
            + (b.coeffs[i] if i < len(b.coeffs) else Fraction(0))
            for i in range(n)
        ]
        return CycNumber(a.order, cs)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1 or 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    out[i + j] += ai * bj
        return CycNumber(a.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Inverse modulo the cyclotomic polynomial (extended Euclid)."""
        if self.is_zero:
            raise ZeroDivisionError("zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order).coeffs]
        r0, r1 = phi, list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while True:
            if not r1:
                raise ArithmeticError("element not invertible")
            if len(r1) == 1:
                inv = 1 / r1[0]
                return CycNumber(self.order, [c * inv for c in s1])
            q, r = _frac_poly_divmod(r0, r1)
            s = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, r1 = r1, r
            s0, s1 = s1, s

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycNumber(self.order, [Fraction(1)])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- Galois action

    def galois(self, k: int) -> "CycNumber":
        """Apply zeta -> zeta^k; k must be coprime to the order."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[(i * k) % n] += c
        return CycNumber(n, cs)

    def conjugate(self) -> "CycNumber":
        """Complex conjugation, zeta -> zeta^(n-1)."""
        if self.order == 1:
            return self
        return self.galois(self.order - 1)

    # -- comparison

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # hash rational values compatibly with Fraction
        if self.is_rational:
            return hash(self.as_fraction())
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycNumber(order={self.order}, coeffs={list(self.coeffs)})"


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        off = len(a) - len(b)
        q[off] = f
        for i, c in enumerate(b):
            a[off + i] -= f * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]


# ---------------------------------------------------------------------------
# embedding quadratic values into cyclotomic fields


def embed_quadratic(x: QuadExt, order: int) -> CycNumber:
    """Embed p + q*sqrt(D) into Q(zeta_order).

    Only the cases actually needed by the workbench are supported: rational
    values (any order) and D = 5 with 5 | order, where
    sqrt(5) = 1 + 2*zeta_5 + 2*zeta_5^4.
    """
    if x.q == 0:
        return CycNumber(order, [x.p])
    if x.D == 5 and order % 5 == 0:
        z = CycNumber.root_of_unity(order, order // 5)
        sqrt5 = 1 + 2 * z + 2 * z ** 4
        return x.p + x.q * sqrt5
    raise UnsupportedFieldError(
        f"cannot embed sqrt({x.D}) into the {order}-th cyclotomic field"
    )
