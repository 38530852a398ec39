"""Assembling signatures and nullities of spliced links.

Splicing two links along tubular neighborhoods of their distinguished
knots adds their signatures up to explicit correction terms.  Away from
the doubly-admissible locus the correction is a product of defects
(``splice_sigma_generic``); on it, an extra term appears that depends
only on the two slopes through the formula

    delta_sigma(r', r'') = sg r' - sg(1/r' - r''),

evaluated on the extended real line with the fixed conventions listed in
``delta_sigma``.  Nothing here computes slopes, signatures or defects;
this module is a pure assembler over values produced elsewhere.

Slopes take values in R plus a single unsigned infinity; the signed
infinities exist only as intermediate results of the arithmetic above.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import CyclotomicElement
from .characters import NUMERIC_TOL, Character, defect, is_admissible
from .errors import ParseError, PreconditionError
from .fox import SlopeValue

__all__ = [
    "ExtendedReal",
    "parse_extended",
    "sg",
    "reciprocal",
    "delta_sigma",
    "hyperbola_region",
    "splice_sigma_generic",
    "splice_sigma_admissible",
]


class ExtendedReal:
    """A point of [-inf, inf] plus the unsigned (projective) infinity.

    kind is one of "finite", "pinf", "minf", "proj"; finite values are
    Fractions or floats.
    """

    __slots__ = ("kind", "value")

    def __init__(self, kind: str, value=None):
        if kind not in ("finite", "pinf", "minf", "proj"):
            raise ValueError(f"bad extended real kind {kind!r}")
        if kind == "finite":
            if isinstance(value, int):
                value = Fraction(value)
            if not isinstance(value, (Fraction, float)):
                raise ValueError("finite extended reals hold Fractions or floats")
        else:
            value = None
        self.kind = kind
        self.value = value

    @classmethod
    def finite(cls, value) -> "ExtendedReal":
        return cls("finite", value)

    @classmethod
    def plus_infinity(cls) -> "ExtendedReal":
        return cls("pinf")

    @classmethod
    def minus_infinity(cls) -> "ExtendedReal":
        return cls("minf")

    @classmethod
    def projective(cls) -> "ExtendedReal":
        return cls("proj")

    @classmethod
    def from_slope(cls, slope: SlopeValue, tol: float = NUMERIC_TOL) -> "ExtendedReal":
        """Convert a slope; finite values must be real within tol."""
        if slope.is_undefined:
            raise PreconditionError("an undefined slope has no extended-real value")
        if slope.is_infinite:
            return cls.projective()
        v = slope.value
        if isinstance(v, (int, Fraction)):
            return cls.finite(Fraction(v))
        if isinstance(v, CyclotomicElement):
            if not v.is_real():
                raise PreconditionError(f"slope {v} is not real")
            if v.is_rational():
                return cls.finite(v.rational_value())
            return cls.finite(v.to_complex().real)
        c = complex(v)
        if abs(c.imag) > tol:
            raise PreconditionError(f"slope {v} is not real within {tol}")
        return cls.finite(c.real)

    @property
    def is_finite(self):
        return self.kind == "finite"

    @property
    def is_infinite(self):
        return self.kind != "finite"

    def is_zero(self) -> bool:
        return self.kind == "finite" and not self.value

    def __neg__(self) -> "ExtendedReal":
        if self.kind == "finite":
            return ExtendedReal.finite(-self.value)
        if self.kind == "pinf":
            return ExtendedReal.minus_infinity()
        if self.kind == "minf":
            return ExtendedReal.plus_infinity()
        return ExtendedReal.projective()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float)):
            other = ExtendedReal.finite(other)
        if not isinstance(other, ExtendedReal):
            return NotImplemented
        if self.kind != other.kind:
            return False
        return self.value == other.value if self.kind == "finite" else True

    def __hash__(self):
        return hash((self.kind, self.value))

    def __repr__(self):
        return f"ExtendedReal({self!s})"

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        return {"pinf": "+inf", "minf": "-inf", "proj": "inf"}[self.kind]

    def as_json(self):
        if self.kind == "finite":
            return float(self.value) if isinstance(self.value, float) else str(self.value)
        return str(self)


def parse_extended(text: str) -> ExtendedReal:
    """Parse "2/3", "-1.5", "inf", "+inf" or "-inf"."""
    text = text.strip().lower()
    if text in ("inf", "infinity"):
        return ExtendedReal.projective()
    if text in ("+inf", "+infinity"):
        return ExtendedReal.plus_infinity()
    if text in ("-inf", "-infinity"):
        return ExtendedReal.minus_infinity()
    try:
        if "/" in text or "." not in text:
            return ExtendedReal.finite(Fraction(text))
        return ExtendedReal.finite(float(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse extended real {text!r}") from exc


def _coerce(x) -> ExtendedReal:
    if isinstance(x, ExtendedReal):
        return x
    if isinstance(x, SlopeValue):
        return ExtendedReal.from_slope(x)
    if isinstance(x, (int, Fraction, float)):
        return ExtendedReal.finite(x)
    if isinstance(x, str):
        return parse_extended(x)
    raise PreconditionError(f"not an extended real: {x!r}")


def sg(x) -> int:
    """Sign symbol: 0 at zero and at the unsigned infinity, else the sign.

    The signed infinities produced by the difference arithmetic carry
    their sign.
    """
    x = _coerce(x)
    if x.kind == "proj":
        return 0
    if x.kind == "pinf":
        return 1
    if x.kind == "minf":
        return -1
    if not x.value:
        return 0
    return 1 if x.value > 0 else -1


def reciprocal(x) -> ExtendedReal:
    """1/x with 1/0 = unsigned infinity and 1/infinity = 0 (any flavor)."""
    x = _coerce(x)
    if x.kind != "finite":
        return ExtendedReal.finite(Fraction(0))
    if not x.value:
        return ExtendedReal.projective()
    if isinstance(x.value, Fraction):
        return ExtendedReal.finite(Fraction(1) / x.value)
    return ExtendedReal.finite(1.0 / x.value)


def _sub(a: ExtendedReal, b: ExtendedReal) -> ExtendedReal:
    """a - b on the extended line, total and deterministic.

    Any infinity minus any infinity is 0.  An unsigned infinity absorbs a
    finite subtrahend; subtracting an unsigned infinity from a finite
    value counts it as +inf.
    """
    if a.is_infinite and b.is_infinite:
        return ExtendedReal.finite(Fraction(0))
    if a.kind == "proj":
        return ExtendedReal.projective()
    if a.kind == "pinf":
        return ExtendedReal.plus_infinity()
    if a.kind == "minf":
        return ExtendedReal.minus_infinity()
    if b.kind in ("proj", "pinf"):
        return ExtendedReal.minus_infinity()
    if b.kind == "minf":
        return ExtendedReal.plus_infinity()
    return ExtendedReal.finite(a.value - b.value)


def delta_sigma(rho_prime, rho_second) -> int:
    """The signature correction sg(r') - sg(1/r' - r'') for two slopes.

    Evaluation order is fixed: first 1/r' (with 1/0 the unsigned infinity
    and 1/inf = 0), then the difference (infinity minus infinity is 0, an
    unsigned infinity on the left absorbs, on the right it counts as
    +inf), then the sign symbols.  The result lies in {-2,-1,0,1,2}.
    """
    r1 = _coerce(rho_prime)
    r2 = _coerce(rho_second)
    return sg(r1) - sg(_sub(reciprocal(r1), r2))


def hyperbola_region(rho_prime, rho_second) -> str:
    """Where (r', r'') sits relative to the curve r' r'' = 1.

    Returns "on", "less", "greater" by the product's comparison with 1,
    or "indeterminate" when an infinity makes the product ambiguous
    (zero times infinity, or any unsigned infinity).
    """
    r1 = _coerce(rho_prime)
    r2 = _coerce(rho_second)
    if r1.is_finite and r2.is_finite:
        p = r1.value * r2.value
        if p == 1:
            return "on"
        return "less" if p < 1 else "greater"
    s1, s2 = sg(r1), sg(r2)
    if s1 == 0 or s2 == 0:
        return "indeterminate"
    return "greater" if s1 * s2 > 0 else "less"


def splice_sigma_generic(sigma_prime, sigma_second, nullity_prime, nullity_second,
                         lam_prime, lam_second, omega_prime: Character,
                         omega_second: Character):
    """Signature and nullity of a splice away from the doubly-admissible locus.

    The caller supplies the two component signatures and nullities already
    evaluated at the extended characters; this adds them and the product
    of defects.  Requires that not both characters are admissible (the
    admissible case has its own assembler).
    """
    adm1 = is_admissible(lam_prime, omega_prime)
    adm2 = is_admissible(lam_second, omega_second)
    if adm1 and adm2:
        raise PreconditionError(
            "both characters are admissible; use splice_sigma_admissible")
    d1 = defect(lam_prime, omega_prime)
    d2 = defect(lam_second, omega_second)
    sigma = sigma_prime + sigma_second + d1 * d2
    nullity = nullity_prime + nullity_second
    return sigma, nullity


def splice_sigma_admissible(sigma_prime, sigma_second, nullity_prime,
                            nullity_second, defect_prime, defect_second,
                            rho_prime, rho_second):
    """Signature of a splice at a doubly-admissible character.

    sigma_L = sigma' + sigma'' + defect' * defect'' + delta_sigma(r', r'').
    The nullity correction has no closed form here; it is reported as
    pending together with the position of the slope pair relative to the
    hyperbola r' r'' = 1, and is bounded by 2 in absolute value.
    """
    correction = delta_sigma(rho_prime, rho_second)
    sigma = sigma_prime + sigma_second + defect_prime * defect_second + correction
    report = {
        "status": "pending",
        "region": hyperbola_region(rho_prime, rho_second),
        "nullity_bounds": [nullity_prime + nullity_second - 2,
                           nullity_prime + nullity_second + 2],
        "delta_sigma": correction,
    }
    return sigma, report
