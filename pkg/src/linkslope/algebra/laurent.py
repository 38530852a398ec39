"""Multivariate Laurent polynomials and rational functions over Q.

A ``LaurentPoly`` is a finite map from integer exponent vectors to nonzero
rational coefficients, over a fixed ordered tuple of variable names.
Exponents may be negative; monomials are units.  ``RationalFunction`` is a
reduced quotient of two such polynomials.  Both types support the handful
of field/ring operations needed by the rest of the package, plus gcd,
exact division, unit normalization and evaluation in an arbitrary field.

Everything here is exact: coefficients are ``fractions.Fraction`` and no
floating point is used outside of ``complex`` evaluation requested by the
caller.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Mapping, Sequence

from ..errors import ParseError

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "multivariate_gcd",
    "parse_poly",
    "parse_rational",
]

Exponents = tuple  # tuple[int, ...]


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class LaurentPoly:
    """A Laurent polynomial in the variables ``vars`` with Fraction coefficients.

    ``terms`` never stores a zero coefficient, and every exponent tuple has
    length ``len(vars)``; the constructor enforces both.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, Fraction] | None = None):
        self.vars = tuple(variables)
        clean: dict[Exponents, Fraction] = {}
        if terms:
            width = len(self.vars)
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != width:
                    raise ValueError(f"exponent tuple {exps} does not match variables {self.vars}")
                coeff = _coerce(coeff)
                if coeff:
                    clean[exps] = clean.get(exps, Fraction(0)) + coeff
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "LaurentPoly":
        value = _coerce(value)
        if not value:
            return cls(variables)
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, power: int = 1) -> "LaurentPoly":
        variables = tuple(variables)
        idx = variables.index(name)
        exps = [0] * len(variables)
        exps[idx] = power
        return cls(variables, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(variables, {tuple(exps): _coerce(coeff)})

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    # -- ring operations ---------------------------------------------------

    def _check_same_ring(self, other: "LaurentPoly") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_ring(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        out = LaurentPoly(self.vars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly(self.vars)
        out.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
            if not other:
                return LaurentPoly(self.vars)
            out = LaurentPoly(self.vars)
            out.terms = {exps: coeff * other for exps, coeff in self.terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_ring(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        out = LaurentPoly(self.vars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers are only defined for monomials")
            (exps, coeff), = self.terms.items()
            return LaurentPoly(self.vars, {tuple(e * n for e in exps): coeff ** n})
        result = LaurentPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure helpers -------------------------------------------------

    def shifted(self, delta: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``delta``."""
        delta = tuple(delta)
        out = LaurentPoly(self.vars)
        out.terms = {tuple(a + b for a, b in zip(exps, delta)): c for exps, c in self.terms.items()}
        return out

    def min_exponents(self) -> Exponents:
        """Componentwise minimum of the exponent vectors (zero vector if empty)."""
        if not self.terms:
            return (0,) * len(self.vars)
        cols = zip(*self.terms.keys())
        return tuple(min(col) for col in cols)

    def lex_min_exponent(self) -> Exponents:
        return min(self.terms) if self.terms else (0,) * len(self.vars)

    def lex_max_exponent(self) -> Exponents:
        return max(self.terms) if self.terms else (0,) * len(self.vars)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the lexicographically greatest exponent."""
        if not self.terms:
            return Fraction(0)
        return self.terms[self.lex_max_exponent()]

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for coeff in self.terms.values():
            num = _int_gcd(num, coeff.numerator)
            den = den * coeff.denominator // _int_gcd(den, coeff.denominator)
        return Fraction(num, den)

    def normal(self) -> "LaurentPoly":
        """Unit-normal form: lex-least exponent shifted to zero, coefficients
        scaled to coprime integers, and the leading coefficient positive.

        Two Laurent polynomials agree up to a unit (+-monomial times rational)
        exactly when their normal forms are equal.
        """
        if not self.terms:
            return self
        shift = tuple(-e for e in self.lex_min_exponent())
        out = self.shifted(shift)
        scale = Fraction(1) / out.content()
        if out.leading_coefficient() < 0:
            scale = -scale
        return out * scale

    def unit_equal(self, other: "LaurentPoly") -> bool:
        return self.normal() == other.normal()

    def degree_in(self, index: int) -> int:
        """Largest exponent of variable ``index`` (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(exps[index] for exps in self.terms)

    def min_degree_in(self, index: int) -> int:
        if not self.terms:
            return 0
        return min(exps[index] for exps in self.terms)

    def coefficient_in(self, index: int, power: int) -> "LaurentPoly":
        """Coefficient of x_index^power, as a polynomial with the same variables."""
        out = LaurentPoly(self.vars)
        out.terms = {
            exps[:index] + (0,) + exps[index + 1:]: coeff
            for exps, coeff in self.terms.items()
            if exps[index] == power
        }
        return out

    def derivative(self, name: str) -> "LaurentPoly":
        idx = self.vars.index(name)
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e == 0:
                continue
            new = exps[:idx] + (e - 1,) + exps[idx + 1:]
            acc = terms.get(new, Fraction(0)) + coeff * e
            if acc:
                terms[new] = acc
            else:
                terms.pop(new, None)
        out = LaurentPoly(self.vars)
        out.terms = terms
        return out

    def substitute_inverse(self, name: str) -> "LaurentPoly":
        """Replace the named variable x by x^-1."""
        idx = self.vars.index(name)
        out = LaurentPoly(self.vars)
        out.terms = {
            exps[:idx] + (-exps[idx],) + exps[idx + 1:]: coeff for exps, coeff in self.terms.items()
        }
        return out

    def rename(self, variables: Sequence[str]) -> "LaurentPoly":
        """Same exponent data over a new variable tuple of equal length."""
        variables = tuple(variables)
        if len(variables) != len(self.vars):
            raise ValueError("variable count mismatch")
        out = LaurentPoly(variables)
        out.terms = dict(self.terms)
        return out

    def restrict(self, name: str, value) -> "LaurentPoly":
        """Substitute a rational value for one variable, dropping it.

        The result lives over the remaining variables.  A zero value is
        rejected when the variable occurs with a negative exponent.
        """
        idx = self.vars.index(name)
        value = _coerce(value)
        rest = self.vars[:idx] + self.vars[idx + 1:]
        out = LaurentPoly(rest)
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e < 0 and not value:
                raise ZeroDivisionError(f"{name}=0 with negative exponent")
            scaled = coeff * value ** e
            if not scaled:
                continue
            key = exps[:idx] + exps[idx + 1:]
            acc = out.terms.get(key, Fraction(0)) + scaled
            if acc:
                out.terms[key] = acc
            else:
                out.terms.pop(key, None)
        return out

    def evaluate(self, point: Sequence):
        """Evaluate at a point whose entries live in any common field.

        Entries must support +, *, - and, when negative exponents occur,
        division of the field one by the entry.  Rationals, complex numbers,
        cyclotomic elements and rational functions all qualify.
        """
        if len(point) != len(self.vars):
            raise ValueError("point length does not match variable count")
        if not self.terms:
            return 0 if not point else _zero_like_sample(point[0])
        total = None
        for exps, coeff in self.terms.items():
            term = None
            for value, e in zip(point, exps):
                if e == 0:
                    continue
                factor = _field_power(value, e)
                term = factor if term is None else term * factor
            if term is None:
                contrib = coeff if not point else _scale_field(point, coeff)
            else:
                contrib = term * coeff if not isinstance(term, complex) else term * complex(coeff)
            total = contrib if total is None else total + contrib
        return total

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.vars!r}, {self!s})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = [
                f"{name}^{e}" if e != 1 else name
                for name, e in zip(self.vars, exps)
                if e != 0
            ]
            body = "*".join(factors)
            if not body:
                text = str(coeff)
            elif coeff == 1:
                text = body
            elif coeff == -1:
                text = f"-{body}"
            else:
                text = f"{coeff}*{body}"
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)


def _zero_like_sample(sample):
    if isinstance(sample, complex):
        return 0j
    if isinstance(sample, (int, Fraction)):
        return Fraction(0)
    return sample.zero_like()


def _one_like_sample(sample):
    if isinstance(sample, complex):
        return 1 + 0j
    if isinstance(sample, (int, Fraction)):
        return Fraction(1)
    return sample.one_like()


def _field_power(value, e: int):
    if e >= 0:
        return value ** e
    one = _one_like_sample(value)
    return (one / value) ** (-e)


def _scale_field(point, coeff: Fraction):
    one = _one_like_sample(point[0])
    if isinstance(one, complex):
        return complex(coeff)
    return one * coeff


# -- gcd machinery ----------------------------------------------------------


def _as_cone(p: LaurentPoly) -> LaurentPoly:
    """Shift so all exponents are nonnegative (gcd is defined up to units)."""
    mins = p.min_exponents()
    if all(m == 0 for m in mins):
        return p
    return p.shifted(tuple(-m for m in mins))


def _univariate_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of dense rational coefficient lists (ascending degree)."""

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        # remainder of a modulo b
        while len(a) >= len(b) and a:
            factor = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, coeff in enumerate(b):
                a[i + shift] -= factor * coeff
            trim(a)
        a, b = b, a
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _poly_to_dense(p: LaurentPoly, index: int) -> list[LaurentPoly]:
    """View as a univariate polynomial in variable ``index`` (exponents >= 0)."""
    deg = p.degree_in(index)
    out = [LaurentPoly(p.vars) for _ in range(deg + 1)]
    for exps, coeff in p.terms.items():
        e = exps[index]
        rest = exps[:index] + (0,) + exps[index + 1:]
        out[e].terms[rest] = out[e].terms.get(rest, Fraction(0)) + coeff
        if not out[e].terms[rest]:
            del out[e].terms[rest]
    while out and out[-1].is_zero():
        out.pop()
    return out


def _dense_to_poly(coeffs: list[LaurentPoly], index: int, variables) -> LaurentPoly:
    total = LaurentPoly(variables)
    for e, c in enumerate(coeffs):
        if c.is_zero():
            continue
        delta = [0] * len(variables)
        delta[index] = e
        total = total + c.shifted(tuple(delta))
    return total


def _gcd_pair(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a = _as_cone(a)
    b = _as_cone(b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return LaurentPoly.one(a.vars)
    # pick the first variable actually appearing in either polynomial
    index = None
    for i in range(len(a.vars)):
        if a.degree_in(i) > 0 or b.degree_in(i) > 0:
            index = i
            break
    if index is None:
        return LaurentPoly.one(a.vars)
    if a.degree_in(index) == 0 or b.degree_in(index) == 0:
        # one of them does not involve the chosen variable: gcd divides its
        # content with respect to that variable
        da = _poly_to_dense(a, index)
        db = _poly_to_dense(b, index)
        ca = _content_list(da, a.vars)
        cb = _content_list(db, a.vars)
        return _gcd_pair(ca, cb)
    # single remaining variable: rational univariate Euclid
    others = [i for i in range(len(a.vars)) if i != index]
    if all(a.degree_in(i) == 0 and b.degree_in(i) == 0 for i in others):
        da = [c.constant_value() for c in _poly_to_dense(a, index)]
        db = [c.constant_value() for c in _poly_to_dense(b, index)]
        g = _univariate_gcd(da, db)
        out = LaurentPoly(a.vars)
        for e, coeff in enumerate(g):
            if coeff:
                delta = [0] * len(a.vars)
                delta[index] = e
                out.terms[tuple(delta)] = coeff
        return out
    # multivariate: primitive polynomial remainder sequence in the chosen
    # variable, with contents handled recursively
    fa = _poly_to_dense(a, index)
    fb = _poly_to_dense(b, index)
    ca = _content_list(fa, a.vars)
    cb = _content_list(fb, a.vars)
    fa = [_exact_divide_strict(c, ca) for c in fa]
    fb = [_exact_divide_strict(c, cb) for c in fb]
    cont = _gcd_pair(ca, cb)
    while fb:
        rem = _pseudo_remainder(fa, fb, a.vars)
        fa, fb = fb, rem
        if fb:
            cfb = _content_list(fb, a.vars)
            fb = [_exact_divide_strict(c, cfb) for c in fb]
    prim = _dense_to_poly(fa, index, a.vars)
    return _as_cone(cont * prim)


def _content_list(coeffs: list[LaurentPoly], variables) -> LaurentPoly:
    acc = LaurentPoly(variables)
    for c in coeffs:
        acc = _gcd_pair(acc, c)
        if acc.is_constant() and not acc.is_zero():
            return LaurentPoly.one(variables)
    return acc if not acc.is_zero() else LaurentPoly.one(variables)


def _pseudo_remainder(f: list[LaurentPoly], g: list[LaurentPoly], variables) -> list[LaurentPoly]:
    """Pseudo-remainder of dense coefficient lists in the main variable."""
    f = [c for c in f]
    if len(f) < len(g):
        return f
    lead_g = g[-1]
    steps = len(f) - len(g) + 1
    for _ in range(steps):
        if not f:
            break
        if len(f) < len(g):
            f = [c * lead_g for c in f]
            continue
        lead_f = f[-1]
        shift = len(f) - len(g)
        new = [c * lead_g for c in f]
        for i, c in enumerate(g):
            new[i + shift] = new[i + shift] - lead_f * c
        f = new
        while f and f[-1].is_zero():
            f.pop()
    return f


def _exact_divide_strict(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    q = exact_divide(num, den)
    if q is None:
        raise ArithmeticError("expected exact divisibility")
    return q


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Quotient num/den when den divides num in the Laurent ring, else None."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly(num.vars)
    num._check_same_ring(den)
    shift_n = num.min_exponents()
    shift_d = den.min_exponents()
    n = num.shifted(tuple(-e for e in shift_n))
    d = den.shifted(tuple(-e for e in shift_d))
    quot = LaurentPoly(num.vars)
    r = n
    lead_d = d.lex_max_exponent()
    cd = d.terms[lead_d]
    while not r.is_zero():
        lead_r = r.lex_max_exponent()
        delta = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(e < 0 for e in delta):
            return None
        coeff = r.terms[lead_r] / cd
        mono = LaurentPoly.monomial(num.vars, delta, coeff)
        quot = quot + mono
        r = r - mono * d
    final_shift = tuple(a - b for a, b in zip(shift_n, shift_d))
    return quot.shifted(final_shift)


def multivariate_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Gcd of a family of Laurent polynomials, in unit-normal form.

    The gcd of an empty family or of all-zero inputs is zero.  The result
    divides every input exactly (this is what the tests pin down); it is
    normalized so that reruns are reproducible.
    """
    acc: LaurentPoly | None = None
    for p in polys:
        if acc is None:
            acc = p
        else:
            acc = _gcd_pair(acc, p)
        if acc is not None and acc.is_constant() and not acc.is_zero():
            return LaurentPoly.one(acc.vars)
    if acc is None:
        raise ValueError("gcd of an empty family needs at least the variable tuple")
    return acc.normal() if not acc.is_zero() else acc


# -- rational functions ------------------------------------------------------


class RationalFunction:
    """A reduced fraction of Laurent polynomials over the same variables.

    The denominator is kept in unit-normal form so that equal fractions
    compare equal structurally.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, *, _reduced: bool = False):
        if den is None:
            den = LaurentPoly.one(num.vars)
        num._check_same_ring(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = LaurentPoly(num.vars)
            self.den = LaurentPoly.one(num.vars)
            return
        if not _reduced:
            g = _gcd_pair(num, den)
            if not (g.is_constant() and not g.is_zero()):
                num = _exact_divide_strict(num, g)
                den = _exact_divide_strict(den, g)
        # normalize the unit so den is in normal form
        target = den.normal()
        unit = exact_divide(target, den)
        if unit is None:  # pragma: no cover - normal() is a unit multiple
            raise ArithmeticError("denominator normalization failed")
        self.num = num * unit
        self.den = target

    @classmethod
    def from_const(cls, variables: Sequence[str], value) -> "RationalFunction":
        return cls(LaurentPoly.constant(variables, value))

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p)

    @property
    def vars(self):
        return self.num.vars

    def zero_like(self) -> "RationalFunction":
        return RationalFunction(LaurentPoly(self.vars))

    def one_like(self) -> "RationalFunction":
        return RationalFunction(LaurentPoly.one(self.vars))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_monomial()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        (exps, coeff), = self.den.terms.items()
        inv = LaurentPoly.monomial(self.vars, tuple(-e for e in exps), Fraction(1) / coeff)
        return self.num * inv

    def __add__(self, other):
        other = self._coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return self.one_like()
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** -n, self.num ** -n)
        return RationalFunction(self.num ** n, self.den ** n)

    def _coerce_rf(self, other):
        if isinstance(other, RationalFunction):
            if other.vars != self.vars:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(LaurentPoly.constant(self.vars, other))
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, point: Sequence):
        """Evaluate at a field point; raises ZeroDivisionError on a pole."""
        den = self.den.evaluate(point)
        if not den:
            raise ZeroDivisionError("pole of rational function")
        num = self.num.evaluate(point)
        if isinstance(den, complex) or isinstance(num, complex):
            return complex(num) / complex(den)
        return num / den

    def __repr__(self):
        return f"RationalFunction({self!s})"

    def __str__(self):
        if self.den == LaurentPoly.one(self.vars):
            return str(self.num)
        return f"({self.num}) / ({self.den})"


# -- parsing -----------------------------------------------------------------


_TOKEN_CHARS = set("+-*/^() \t")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append(ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r} in polynomial literal at offset {i}")
    return tokens


class _ExprParser:
    """Recursive-descent parser for rational expressions in named variables.

    Grammar (standard precedence, ^ binds tightest and takes signed integer
    exponents): expr := term (('+'|'-') term)*; term := signed (('*'|'/')
    signed)*; signed := '-'* power; power := atom ('^' '-'? int)?; atom :=
    int | name | '(' expr ')'.
    """

    def __init__(self, tokens: list[str], variables: Sequence[str]):
        self.tokens = tokens
        self.pos = 0
        self.vars = tuple(variables)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing tokens starting at {self.peek()!r}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.signed()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.signed()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero in literal")
                value = value / rhs
        return value

    def signed(self) -> RationalFunction:
        negate = False
        while self.peek() == "-":
            self.take()
            negate = not negate
        if self.peek() == "+":
            self.take()
            return self.signed()
        value = self.power()
        return -value if negate else value

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ParseError(f"expected integer exponent, got {tok!r}")
            e = sign * int(tok)
            if e >= 0:
                num = self.pow_poly(base, e)
                return num
            inv = self.pow_poly(base, -e)
            if inv.is_zero():
                raise ParseError("zero raised to a negative power")
            return inv.one_like() / inv
        return base

    @staticmethod
    def pow_poly(base: RationalFunction, e: int) -> RationalFunction:
        out = base.one_like()
        for _ in range(e):
            out = out * base
        return out

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of polynomial literal")
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.isdigit():
            return RationalFunction.from_const(self.vars, int(tok))
        if tok[0].isalpha() or tok[0] == "_":
            if tok not in self.vars:
                raise ParseError(f"unknown variable {tok!r}; expected one of {', '.join(self.vars)}")
            return RationalFunction(LaurentPoly.variable(self.vars, tok))
        raise ParseError(f"unexpected token {tok!r}")


def parse_rational(text: str, variables: Sequence[str]) -> RationalFunction:
    """Parse a rational expression such as ``-(t1-1)^2 / (t1^2 - 3*t1 + 1)``."""
    return _ExprParser(_tokenize(text), variables).parse()


def parse_poly(text: str, variables: Sequence[str]) -> LaurentPoly:
    """Parse a Laurent polynomial literal such as ``3*t1^2*t2^-1 - 1``.

    Integer-denominator coefficients like ``1/2*t1`` are accepted; anything
    with an essential polynomial denominator is rejected.
    """
    value = parse_rational(text, variables)
    if not value.is_polynomial():
        raise ParseError(f"{text!r} is not a Laurent polynomial")
    return value.as_laurent()
