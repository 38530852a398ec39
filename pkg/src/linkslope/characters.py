"""Characters on link groups and their bookkeeping.

A character assigns a nonzero complex value to each color's meridian.  The
exact kind stores a common conductor n and exponents k_i (value i is
zeta_n^{k_i}), canonicalized to the least conductor; the numeric kind is a
tuple of complex floats; the symbolic kind stands for free torus
coordinates.  On top of the type live the admissibility test, the
cyclotomic decomposition of the admissible variety, the defect function,
the prime-power concordance-root criterion, and an enumerator of unitary
admissible characters up to a conductor bound.

Everything that feeds concordance or defect conclusions insists on exact
characters; numeric ones are accepted only where a tolerance is explicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor, gcd
from typing import Sequence

from .algebra import CyclotomicElement, root_of_unity
from .errors import ParseError, PreconditionError

__all__ = [
    "Character",
    "AdmissibleVariety",
    "ind",
    "is_admissible",
    "admissible_components",
    "is_concordance_root",
    "defect",
    "enumerate_unitary_admissible",
    "parse_character",
]


NUMERIC_TOL = 1e-9


class Character:
    """A character value tuple, one entry per color.

    kind is one of "exact", "numeric", "symbolic".  Exact characters are
    hashable and canonical; the other kinds compare by payload.
    """

    __slots__ = ("kind", "conductor", "exponents", "values_numeric", "names")

    def __init__(self, kind: str, *, conductor: int = 1, exponents: Sequence[int] = (),
                 values_numeric: Sequence[complex] = (), names: Sequence[str] = ()):
        self.kind = kind
        self.conductor = 1
        self.exponents = ()
        self.values_numeric = ()
        self.names = ()
        if kind == "exact":
            if conductor < 1:
                raise ValueError("conductor must be positive")
            exps = [k % conductor for k in exponents]
            g = conductor
            for k in exps:
                g = gcd(g, k)
            n = conductor // g
            self.conductor = n
            self.exponents = tuple((k // g) % n for k in exps) if n > 1 else tuple(0 for _ in exps)
        elif kind == "numeric":
            self.values_numeric = tuple(complex(v) for v in values_numeric)
            for v in self.values_numeric:
                if v == 0:
                    raise PreconditionError("character values must be nonzero")
        elif kind == "symbolic":
            self.names = tuple(names)
        else:
            raise ValueError(f"unknown character kind {kind!r}")

    # -- constructors --------------------------------------------------------

    @classmethod
    def exact(cls, conductor: int, exponents: Sequence[int]) -> "Character":
        return cls("exact", conductor=conductor, exponents=exponents)

    @classmethod
    def numeric(cls, values: Sequence[complex]) -> "Character":
        return cls("numeric", values_numeric=values)

    @classmethod
    def symbolic(cls, names: Sequence[str]) -> "Character":
        return cls("symbolic", names=names)

    @classmethod
    def minus_ones(cls, mu: int) -> "Character":
        """The all-(-1) character on mu colors."""
        return cls.exact(2, [1] * mu)

    # -- basic views ---------------------------------------------------------

    @property
    def mu(self) -> int:
        if self.kind == "exact":
            return len(self.exponents)
        if self.kind == "numeric":
            return len(self.values_numeric)
        return len(self.names)

    def is_exact(self) -> bool:
        return self.kind == "exact"

    def coordinate_order(self, i: int) -> int:
        """Multiplicative order of the i-th value (exact characters only)."""
        self._need_exact()
        k = self.exponents[i]
        return self.conductor // gcd(self.conductor, k) if k else 1

    def log_exact(self, i: int) -> Fraction:
        """Log of the i-th value: the rational k_i/n in [0,1)."""
        self._need_exact()
        return Fraction(self.exponents[i], self.conductor)

    def values(self) -> list[CyclotomicElement]:
        """Coordinate values as exact cyclotomic numbers."""
        self._need_exact()
        return [root_of_unity(self.conductor, k) for k in self.exponents]

    def values_complex(self) -> list[complex]:
        if self.kind == "numeric":
            return list(self.values_numeric)
        if self.kind == "exact":
            return [v.to_complex() for v in self.values()]
        raise PreconditionError("symbolic characters have no numeric values")

    def coordinate_is_one(self, i: int, tol: float = NUMERIC_TOL) -> bool:
        if self.kind == "exact":
            return self.exponents[i] == 0
        if self.kind == "numeric":
            return abs(self.values_numeric[i] - 1) <= tol
        return False

    def drop(self, i: int) -> "Character":
        """The character with coordinate i removed."""
        if self.kind == "exact":
            exps = self.exponents[:i] + self.exponents[i + 1:]
            return Character.exact(self.conductor, exps)
        if self.kind == "numeric":
            vals = self.values_numeric[:i] + self.values_numeric[i + 1:]
            return Character.numeric(vals)
        return Character.symbolic(self.names[:i] + self.names[i + 1:])

    def inverse(self) -> "Character":
        """Coordinatewise complex conjugate (inverse on the unit torus)."""
        if self.kind == "exact":
            n = self.conductor
            return Character.exact(n, [(-k) % n for k in self.exponents])
        if self.kind == "numeric":
            return Character.numeric([1 / v for v in self.values_numeric])
        raise PreconditionError("symbolic characters have no inverse")

    def _need_exact(self):
        if self.kind != "exact":
            raise PreconditionError("this operation requires an exact character")

    # -- equality -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "exact":
            return (self.conductor, self.exponents) == (other.conductor, other.exponents)
        if self.kind == "numeric":
            return self.values_numeric == other.values_numeric
        return self.names == other.names

    def __hash__(self):
        if self.kind == "exact":
            return hash(("exact", self.conductor, self.exponents))
        if self.kind == "numeric":
            return hash(("numeric", self.values_numeric))
        return hash(("symbolic", self.names))

    def __repr__(self):
        return f"Character({self.describe()})"

    def describe(self) -> str:
        if self.kind == "exact":
            parts = []
            for k in self.exponents:
                if k == 0:
                    parts.append("1")
                elif 2 * k == self.conductor:
                    parts.append("-1")
                elif k == 1:
                    parts.append(f"zeta({self.conductor})")
                else:
                    parts.append(f"zeta({self.conductor})^{k}")
            return ", ".join(parts)
        if self.kind == "numeric":
            return ", ".join(_format_complex(v) for v in self.values_numeric)
        return ", ".join(self.names)


def _format_complex(v: complex) -> str:
    if v.imag == 0:
        return f"{v.real:g}"
    return f"{v.real:g}{v.imag:+g}i"


@dataclass
class AdmissibleVariety:
    """Decomposition of the admissible torus subset cut out by omega^lambda = 1.

    For lambda = 0 the variety is the whole torus.  Otherwise it is the
    union over divisors d of N = gcd(lambda) of the zero sets of
    Phi_d(omega^nu), with nu = lambda/N; the divisors that are prime powers
    (including 1) are flagged: those components consist of candidate
    concordance-invariant characters.
    """

    lam: tuple
    full_torus: bool
    N: int = 0
    nu: tuple = ()
    components: list = field(default_factory=list)  # list of (d, prime_power_flag)


def ind(x) -> int:
    """floor(x) - floor(-x): 2m at the integer m, 2*floor(x)+1 between."""
    x = Fraction(x)
    return floor(x) - floor(-x)


def _as_lambda(lam) -> tuple:
    return tuple(int(v) for v in lam)


def is_admissible(lam, omega: Character, tol: float = NUMERIC_TOL) -> bool:
    """Whether omega^lambda = 1 (exactly for exact/symbolic, tol for numeric)."""
    lam = _as_lambda(lam)
    if omega.mu != len(lam):
        raise PreconditionError(
            f"character has {omega.mu} coordinates but lambda has {len(lam)}")
    if omega.kind == "exact":
        total = sum(l * k for l, k in zip(lam, omega.exponents))
        return total % omega.conductor == 0
    if omega.kind == "numeric":
        prod = 1 + 0j
        for l, v in zip(lam, omega.values_numeric):
            prod *= v ** l
        return abs(prod - 1) <= tol
    return all(l == 0 for l in lam)


def admissible_components(lam) -> AdmissibleVariety:
    """The cyclotomic components A_d of the admissible variety."""
    lam = _as_lambda(lam)
    if all(l == 0 for l in lam):
        return AdmissibleVariety(lam=lam, full_torus=True)
    N = 0
    for l in lam:
        N = gcd(N, abs(l))
    nu = tuple(l // N for l in lam)
    comps = [(d, _is_prime_power_or_one(d)) for d in sorted(_divisors(N))]
    return AdmissibleVariety(lam=lam, full_torus=False, N=N, nu=nu, components=comps)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _is_prime_power_or_one(d: int) -> bool:
    if d == 1:
        return True
    p = 2
    while p * p <= d:
        if d % p == 0:
            while d % p == 0:
                d //= p
            return d == 1
        p += 1
    return True  # d itself is prime


def is_concordance_root(omega: Character) -> str:
    """"no" when provably not a concordance root, "yes" when provably one.

    A coordinate whose order has two distinct prime factors witnesses "yes"
    (its cyclotomic polynomial takes the value 1 at 1).  A single
    coordinate, or a character with all coordinates equal, reduces to the
    one-variable criterion: not a root exactly when the order is a prime
    power (1 included).  Anything else is out of the criterion's reach.
    """
    omega._need_exact()
    if omega.mu == 0:
        return "no"
    orders = [omega.coordinate_order(i) for i in range(omega.mu)]
    for d in orders:
        if not _is_prime_power_or_one(d):
            return "yes"
    if omega.mu == 1 or len(set(omega.exponents)) == 1:
        return "no"
    return "unknown"


def defect(lam, omega: Character) -> int:
    """ind(sum of lambda_i Log omega_i) - sum of lambda_i ind(Log omega_i)."""
    lam = _as_lambda(lam)
    if omega.kind != "exact":
        raise PreconditionError("defect requires an exact character")
    if omega.mu != len(lam):
        raise PreconditionError(
            f"character has {omega.mu} coordinates but lambda has {len(lam)}")
    logs = [omega.log_exact(i) for i in range(omega.mu)]
    total = sum((l * x for l, x in zip(lam, logs)), Fraction(0))
    return ind(total) - sum(l * ind(x) for l, x in zip(lam, logs))


def enumerate_unitary_admissible(lam, max_order: int) -> list[Character]:
    """All exact characters of conductor <= max_order with every value on
    the unit circle minus 1 and omega^lambda = 1, deduplicated and sorted.
    """
    lam = _as_lambda(lam)
    mu = len(lam)
    if max_order < 2:
        raise PreconditionError("max_order must be at least 2")
    if mu == 0:
        return [Character.exact(1, [])]
    seen = set()
    out = []
    for n in range(2, max_order + 1):
        for ks in product(range(1, n), repeat=mu):
            if sum(l * k for l, k in zip(lam, ks)) % n:
                continue
            ch = Character.exact(n, ks)
            if any(ch.exponents[i] == 0 for i in range(mu)):
                continue
            if ch not in seen:
                seen.add(ch)
                out.append(ch)
    out.sort(key=lambda c: (c.conductor, c.exponents))
    return out


# -- parsing -------------------------------------------------------------------

_ZETA_RE = re.compile(r"^zeta\((\d+)\)(?:\^(-?\d+))?$")
_NUMERIC_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:\.\d*)?)?(?P<im>[+-](?:\d+(?:\.\d*)?)?)?[ij]?$")
_SYMBOL_RE = re.compile(r"^t\d+$")


def parse_character(text: str) -> Character:
    """Parse a character literal.

    Exact: ``zeta(6)^1, zeta(6)^5`` (also ``1`` and ``-1``).  Numeric:
    ``-0.5+0.866i, 1i``.  Symbolic: ``t1, t2``.  An optional pair of outer
    parentheses around the whole list is allowed.
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        inner = text[1:-1]
        if inner.count("(") == inner.count(")"):
            text = inner
    items = [part.strip() for part in text.split(",")]
    if items == [""]:
        raise ParseError("empty character literal")
    if all(_SYMBOL_RE.match(it) for it in items):
        return Character.symbolic(items)
    parsed = []
    for it in items:
        got = _parse_exact_item(it)
        if got is not None:
            parsed.append(("exact", got))
            continue
        val = _parse_numeric_item(it)
        if val is None:
            raise ParseError(f"cannot parse character coordinate {it!r}")
        parsed.append(("numeric", val))
    if all(kind == "exact" for kind, _ in parsed):
        big = 1
        for _, (n, _k) in parsed:
            big = big * n // gcd(big, n)
        exps = [k * (big // n) for _, (n, k) in parsed]
        return Character.exact(big, exps)
    values = []
    for kind, payload in parsed:
        if kind == "numeric":
            values.append(payload)
        else:
            n, k = payload
            values.append(root_of_unity(n, k).to_complex())
    return Character.numeric(values)


def _parse_exact_item(it: str):
    if it == "1":
        return (1, 0)
    if it == "-1":
        return (2, 1)
    m = _ZETA_RE.match(it)
    if m:
        n = int(m.group(1))
        if n < 1:
            return None
        k = int(m.group(2)) if m.group(2) is not None else 1
        return (n, k % n)
    return None


def _parse_numeric_item(it: str):
    it = it.replace(" ", "")
    try:
        return complex(it.replace("i", "j"))
    except ValueError:
        return None
