"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as rational coordinate vectors in the power basis
1, z, ..., z^(d-1) of Q[x]/Phi_n(x), where z = exp(2*pi*i/n) and d is the
degree of the n-th cyclotomic polynomial.  Conductors are mixed freely:
binary operations promote both sides into Q(zeta_lcm).

The module keeps per-conductor reduction tables (x^k mod Phi_n) so that
products, conjugates and promotions are table lookups plus rational
arithmetic.  No floating point enters except in ``to_complex``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

__all__ = ["CyclotomicElement", "cyclotomic_polynomial", "root_of_unity"]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree, monic."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_int_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_int_div(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomial lists; den is monic and divides num."""
    out = [0] * (len(num) - len(den) + 1)
    num = list(num)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        out[k] = coeff
        if coeff:
            for i, c in enumerate(den):
                num[k + i] -= coeff * c
    return out


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k is the coordinate vector of z^k, for 0 <= k < max(2d-1, n+1)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    limit = max(2 * d - 1, n + 1)
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    rows.append(tuple(cur))
    for _ in range(1, limit):
        shifted = [Fraction(0)] + cur
        lead = shifted[d] if len(shifted) > d else Fraction(0)
        cur = shifted[:d]
        if lead:
            for i in range(d):
                cur[i] -= lead * phi[i]
        rows.append(tuple(cur))
    return tuple(rows)


def _degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CyclotomicElement:
    """An element of Q(zeta_n), exact and immutable in practice.

    Usual arithmetic works against ints, Fractions, and elements with any
    conductor (values are promoted to the least common field).  Instances
    are unhashable on purpose: equal values can live in different fields,
    so identity-style hashing would be a trap.
    """

    __slots__ = ("n", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, n: int, coeffs):
        d = _degree(n)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > d:
            table = _reduction_table(n)
            acc = [Fraction(0)] * d
            for k, c in enumerate(coeffs):
                if not c:
                    continue
                row = table[k] if k < len(table) else _power_row(n, k)
                for i in range(d):
                    acc[i] += c * row[i]
            coeffs = acc
        else:
            coeffs = coeffs + [Fraction(0)] * (d - len(coeffs))
        self.n = n
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value, n: int = 1) -> "CyclotomicElement":
        return cls(n, [Fraction(value)])

    def zero_like(self) -> "CyclotomicElement":
        return CyclotomicElement(self.n, [])

    def one_like(self) -> "CyclotomicElement":
        return CyclotomicElement(self.n, [Fraction(1)])

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- promotion ---------------------------------------------------------

    def promote(self, big: int) -> "CyclotomicElement":
        """Reinterpret inside Q(zeta_big); requires n | big."""
        if big == self.n:
            return self
        if big % self.n:
            raise ValueError(f"cannot promote conductor {self.n} into {big}")
        step = big // self.n
        d = _degree(big)
        acc = [Fraction(0)] * d
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _power_row(big, k * step)
            for i in range(d):
                acc[i] += c * row[i]
        out = CyclotomicElement.__new__(CyclotomicElement)
        out.n = big
        out.coeffs = tuple(acc)
        return out

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.from_rational(other, 1)
        if not isinstance(other, CyclotomicElement):
            return None, None
        if self.n == other.n:
            return self, other
        big = lcm(self.n, other.n)
        return self.promote(big), other.promote(big)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        out = CyclotomicElement.__new__(CyclotomicElement)
        out.n = a.n
        out.coeffs = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        return out

    __radd__ = __add__

    def __neg__(self):
        out = CyclotomicElement.__new__(CyclotomicElement)
        out.n = self.n
        out.coeffs = tuple(-c for c in self.coeffs)
        return out

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            out = CyclotomicElement.__new__(CyclotomicElement)
            out.n = self.n
            out.coeffs = tuple(c * scale for c in self.coeffs)
            return out
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        d = len(a.coeffs)
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        table = _reduction_table(a.n)
        acc = [Fraction(0)] * d
        for k, c in enumerate(conv):
            if not c:
                continue
            row = table[k]
            for i in range(d):
                acc[i] += c * row[i]
        out = CyclotomicElement.__new__(CyclotomicElement)
        out.n = a.n
        out.coeffs = tuple(acc)
        return out

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        if self.is_rational():
            return CyclotomicElement(self.n, [1 / self.coeffs[0]])
        # extended Euclid in Q[x] against the (irreducible) minimal polynomial
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = list(self.coeffs)
        u, prev_u = [Fraction(1)], [Fraction(0)]
        r, prev_r = a, phi
        while _poly_deg(r) > 0:
            q, rem = _poly_divmod(prev_r, r)
            prev_r, r = r, rem
            new_u = _poly_sub(prev_u, _poly_mul(q, u))
            prev_u, u = u, new_u
        if not r or not r[0]:
            raise ZeroDivisionError("element is a zero divisor (bad conductor data)")
        scale = 1 / r[0]
        inv = [c * scale for c in u]
        return CyclotomicElement(self.n, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.from_rational(other, 1).promote(self.n) * self.inverse()
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.one_like()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    # -- field automorphisms -------------------------------------------------

    def conjugate(self) -> "CyclotomicElement":
        """Complex conjugation, z -> z^(n-1)."""
        return self.galois(self.n - 1) if self.n > 1 else self

    def galois(self, j: int) -> "CyclotomicElement":
        """The automorphism z -> z^j; j must be coprime to the conductor."""
        if self.n == 1:
            return self
        if gcd(j, self.n) != 1:
            raise ValueError(f"{j} is not coprime to the conductor {self.n}")
        d = len(self.coeffs)
        acc = [Fraction(0)] * d
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _power_row(self.n, (k * j) % self.n)
            for i in range(d):
                acc[i] += c * row[i]
        out = CyclotomicElement.__new__(CyclotomicElement)
        out.n = self.n
        out.coeffs = tuple(acc)
        return out

    # -- conversion -----------------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        total = 0j
        power = 1 + 0j
        for c in self.coeffs:
            if c:
                total += float(c) * power
            power *= z
        return total

    def __repr__(self):
        return f"CyclotomicElement(n={self.n}, {self!s})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                base = f"z{self.n}" if k == 1 else f"z{self.n}^{k}"
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")


def _power_row(n: int, k: int) -> tuple[Fraction, ...]:
    table = _reduction_table(n)
    if k < len(table):
        return table[k]
    k %= n
    return table[k]


def _poly_deg(p: list[Fraction]) -> int:
    d = len(p) - 1
    while d >= 0 and not p[d]:
        d -= 1
    return d


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    _poly_trim(a)
    db = _poly_deg(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - db, 1)
    while _poly_deg(a) >= db:
        da = _poly_deg(a)
        factor = a[da] / b[db]
        q[da - db] = factor
        for i in range(db + 1):
            a[i + da - db] -= factor * b[i]
        _poly_trim(a)
    return _poly_trim(q), a


def root_of_unity(n: int, k: int = 1) -> CyclotomicElement:
    """exp(2*pi*i*k/n), stored in the least field containing it."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    k %= n
    g = gcd(k, n) if k else n
    m = n // g
    j = (k // g) % m if m > 1 else 0
    coeffs = [Fraction(0)] * max(j + 1, 1)
    coeffs[j] = Fraction(1)
    return CyclotomicElement(m, coeffs)
