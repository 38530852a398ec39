"""Slopes, signatures and nullities from clasp-surface data.

A surface system for a colored link is recorded algebraically: one integer
Seifert matrix theta^eps per push-off direction eps in {+1,-1}^mu, the
covector kappa of linking numbers of the distinguished knot with a basis
of surface 1-cycles, and the number of connected components of the
surface.  Evaluating a character omega turns this into the matrices

    A(omega) = sum over eps of  prod_i eps_i omega_i^((1-eps_i)/2) theta^eps,
    E(omega) = A(omega) / prod_i (1 - omega_i).

The slope is read off by classifying kappa against the image of E(omega)
and the annihilator of its kernel; the signature and nullity are the
inertia data of the Hermitian E(omega) at unitary characters.

Characters may be given as ``Character`` objects (exact, numeric or
symbolic) or as plain sequences of field values (Fractions, cyclotomic
elements, rational functions, complex numbers), which makes it possible
to evaluate at exact points that are not roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import (
    CyclotomicElement,
    LaurentPoly,
    RationalFunction,
    hermitian_signature,
    kernel_basis,
    smith_invariants,
    solve_system,
)
from .characters import NUMERIC_TOL, Character
from .errors import PreconditionError
from .fox import SlopeValue

__all__ = [
    "CComplexData",
    "a_matrix",
    "e_matrix",
    "slope_c_complex",
    "slope_seifert",
    "signature_nullity",
    "validate_realizability",
]


def _sign_keys(mu: int) -> list:
    return ["".join(p) for p in product("+-", repeat=mu)]


def _flip(key: str) -> str:
    return "".join("-" if ch == "+" else "+" for ch in key)


def _transpose(matrix):
    return tuple(tuple(row[i] for row in matrix) for i in range(len(matrix)))


def _as_int_matrix(matrix, rank: int, what: str):
    rows = [list(row) for row in matrix]
    if len(rows) != rank or any(len(row) != rank for row in rows):
        raise PreconditionError(f"{what} must be a {rank}x{rank} matrix")
    out = []
    for row in rows:
        new = []
        for x in row:
            v = int(x)
            if v != x:
                raise PreconditionError(f"{what} must have integer entries")
            new.append(v)
        out.append(tuple(new))
    return tuple(out)


class CComplexData:
    """Seifert matrices of a clasp surface system, plus the knot covector.

    thetas maps sign strings like "+-" (one character per color) to
    rank x rank integer matrices; flipping every sign must transpose the
    matrix.  For mu = 1 the "-" matrix may be omitted and is derived.
    kappa defaults to the zero covector, b0 to a connected surface.
    """

    __slots__ = ("mu", "rank", "thetas", "kappa", "b0")

    def __init__(self, mu, rank, thetas, kappa=None, b0=1):
        self.mu = int(mu)
        self.rank = int(rank)
        self.b0 = int(b0)
        if self.mu < 1:
            raise PreconditionError("a surface datum needs at least one color")
        if self.rank < 0:
            raise PreconditionError("rank must be nonnegative")
        if self.b0 < 1:
            raise PreconditionError("b0 must be at least 1")
        normalized = {}
        for key, mat in thetas.items():
            key = self._norm_key(key)
            if key in normalized:
                raise PreconditionError(f"duplicate Seifert matrix for {key!r}")
            normalized[key] = _as_int_matrix(mat, self.rank, f"theta^{key}")
        if self.mu == 1 and "+" in normalized and "-" not in normalized:
            normalized["-"] = _transpose(normalized["+"])
        missing = [k for k in _sign_keys(self.mu) if k not in normalized]
        if missing:
            raise PreconditionError(
                f"missing Seifert matrices for sign vectors {missing}")
        for key, mat in normalized.items():
            if normalized[_flip(key)] != _transpose(mat):
                raise PreconditionError(
                    f"theta^{_flip(key)} must be the transpose of theta^{key}")
        if self.mu == 1:
            report = validate_realizability(normalized["+"])
            if not report["ok"]:
                raise PreconditionError(
                    "theta - theta^T has invariant factors "
                    f"{report['invariant_factors']}; not a Seifert form")
        self.thetas = normalized
        if kappa is None:
            kappa = [0] * self.rank
        kappa = [int(x) for x in kappa]
        if len(kappa) != self.rank:
            raise PreconditionError("kappa must have one entry per basis cycle")
        self.kappa = tuple(kappa)

    def _norm_key(self, key) -> str:
        if not isinstance(key, str):
            key = "".join("+" if int(e) > 0 else "-" for e in key)
        if len(key) != self.mu or any(ch not in "+-" for ch in key):
            raise PreconditionError(
                f"sign vector {key!r} does not match {self.mu} color(s)")
        return key

    @classmethod
    def from_seifert(cls, theta, kappa=None, b0=1) -> "CComplexData":
        """One-color datum from a single Seifert matrix."""
        return cls(1, len(theta), {"+": theta}, kappa=kappa, b0=b0)

    @classmethod
    def from_json(cls, obj: dict) -> "CComplexData":
        for field in ("mu", "rank", "thetas"):
            if field not in obj:
                raise PreconditionError(f"surface datum is missing {field!r}")
        return cls(obj["mu"], obj["rank"], obj["thetas"],
                   kappa=obj.get("kappa"), b0=obj.get("b0", 1))

    def to_json(self) -> dict:
        keys = ["+"] if self.mu == 1 else _sign_keys(self.mu)
        return {
            "mu": self.mu,
            "rank": self.rank,
            "thetas": {k: [list(row) for row in self.thetas[k]] for k in keys},
            "kappa": list(self.kappa),
            "b0": self.b0,
        }

    def mirror(self) -> "CComplexData":
        """The datum of the mirror-image link: theta^eps <- -theta^(-eps)."""
        thetas = {
            key: tuple(tuple(-x for x in row) for row in self.thetas[_flip(key)])
            for key in _sign_keys(self.mu)
        }
        return CComplexData(self.mu, self.rank, thetas,
                            kappa=[-k for k in self.kappa], b0=self.b0)

    def __repr__(self):
        return (f"CComplexData(mu={self.mu}, rank={self.rank}, "
                f"kappa={list(self.kappa)}, b0={self.b0})")


# -- character handling ---------------------------------------------------------


def _one_like(sample):
    if isinstance(sample, complex):
        return 1 + 0j
    if isinstance(sample, (int, Fraction)):
        return Fraction(1)
    return sample.one_like()


def _character_values(omega, mu: int):
    """Field values of a character, plus whether they are floating point."""
    if isinstance(omega, Character):
        if omega.mu != mu:
            raise PreconditionError(
                f"character has {omega.mu} coordinates but the datum has {mu} colors")
        if omega.kind == "exact":
            return omega.values(), False
        if omega.kind == "numeric":
            return list(omega.values_numeric), True
        vals = [RationalFunction(LaurentPoly.variable(omega.names, name))
                for name in omega.names]
        return vals, False
    vals = list(omega)
    if len(vals) != mu:
        raise PreconditionError(
            f"character has {len(vals)} coordinates but the datum has {mu} colors")
    numeric = any(isinstance(v, (float, complex)) for v in vals)
    out = []
    for v in vals:
        if numeric:
            out.append(v.to_complex() if isinstance(v, CyclotomicElement)
                       else complex(v))
        elif isinstance(v, int):
            out.append(Fraction(v))
        elif isinstance(v, LaurentPoly):
            out.append(RationalFunction(v))
        else:
            out.append(v)
    return out, numeric


def _require_regular(vals, numeric: bool, tol: float):
    """Every coordinate must be away from 0 and from 1."""
    for i, v in enumerate(vals):
        if numeric:
            if abs(v) <= tol:
                raise PreconditionError(f"character coordinate {i + 1} vanishes")
            if abs(v - 1) <= tol:
                raise PreconditionError(
                    f"character coordinate {i + 1} equals 1; a surface datum "
                    "cannot be patched, use a diagram route instead")
        else:
            if not v:
                raise PreconditionError(f"character coordinate {i + 1} vanishes")
            if v == 1:
                raise PreconditionError(
                    f"character coordinate {i + 1} equals 1; a surface datum "
                    "cannot be patched, use a diagram route instead")


# -- the matrices ----------------------------------------------------------------


def a_matrix(data: CComplexData, omega, *, tol: float = NUMERIC_TOL):
    """The matrix A(omega): signed, scaled sum of the Seifert matrices.

    The sign vector with all entries +1 contributes theta^{+...+} with
    coefficient 1; each -1 in position i multiplies the coefficient by
    -omega_i.  For one color this is theta - omega * theta^T.
    """
    vals, numeric = _character_values(omega, data.mu)
    _require_regular(vals, numeric, tol)
    one = _one_like(vals[0])
    zero = one - one
    r = data.rank
    acc = [[zero for _ in range(r)] for _ in range(r)]
    for key, theta in data.thetas.items():
        coeff = one
        for i, ch in enumerate(key):
            if ch == "-":
                coeff = coeff * (-vals[i])
        for i in range(r):
            row = theta[i]
            for j in range(r):
                if row[j]:
                    acc[i][j] = acc[i][j] + coeff * row[j]
    return acc


def e_matrix(data: CComplexData, omega, *, tol: float = NUMERIC_TOL):
    """A(omega) divided by the product of (1 - omega_i)."""
    vals, numeric = _character_values(omega, data.mu)
    _require_regular(vals, numeric, tol)
    matrix = a_matrix(data, omega, tol=tol)
    one = _one_like(vals[0])
    scale = one
    for v in vals:
        scale = scale * (one - v)
    return [[x / scale for x in row] for row in matrix]


# -- kappa classification ----------------------------------------------------------


def _pairing(vec, kappa):
    total = None
    for a, k in zip(vec, kappa):
        term = a * k
        total = term if total is None else total + term
    return total


def _classify_exact(matrix, kappa):
    one = _one_like(matrix[0][0])
    rhs = [one * k for k in kappa]
    alpha = solve_system(matrix, rhs)
    in_ann = all(not bool(_pairing(v, kappa)) for v in kernel_basis(matrix))
    return alpha is not None, alpha, in_ann


def _classify_numeric(matrix, kappa, tol):
    import numpy as np

    arr = np.array(matrix, dtype=complex)
    rhs = np.array([complex(k) for k in kappa])
    rank = np.linalg.matrix_rank(arr, tol=tol)
    aug = np.column_stack([arr, rhs])
    in_image = np.linalg.matrix_rank(aug, tol=tol) == rank
    alpha = np.linalg.lstsq(arr, rhs, rcond=None)[0] if in_image else None
    _, _, vh = np.linalg.svd(arr)
    scale = tol * max(1.0, float(np.linalg.norm(rhs)))
    in_ann = all(abs(np.dot(vh[i].conj(), rhs)) <= scale
                 for i in range(rank, len(vh)))
    return in_image, alpha, in_ann


def _slope_from_matrix(matrix, kappa, numeric, tol, factor):
    """Trichotomy for kappa against a square matrix over a field.

    Finite when kappa is both a value of the matrix and orthogonal to its
    kernel, with value -factor * <alpha, kappa> for any preimage alpha;
    infinity when it is neither; otherwise the slope does not exist.
    """
    if not matrix:
        return SlopeValue.finite(Fraction(0))
    if numeric:
        in_image, alpha, in_ann = _classify_numeric(matrix, kappa, tol)
    else:
        in_image, alpha, in_ann = _classify_exact(matrix, kappa)
    if in_image and in_ann:
        paired = _pairing(alpha, kappa)
        if paired is None:
            return SlopeValue.finite(Fraction(0))
        value = -(factor * paired)
        return SlopeValue.finite(complex(value) if numeric else value)
    if not in_image and not in_ann:
        return SlopeValue.infinity()
    return SlopeValue.undefined(2 if in_image else 0)


def slope_c_complex(data: CComplexData, omega, *, tol: float = NUMERIC_TOL) -> SlopeValue:
    """Slope of the distinguished knot against the surface system.

    Requires every character coordinate away from 0 and 1.  The linking
    covector kappa is classified against E(omega): a preimage alpha gives
    the finite value -<alpha, kappa>.
    """
    vals, numeric = _character_values(omega, data.mu)
    _require_regular(vals, numeric, tol)
    matrix = e_matrix(data, omega, tol=tol)
    one = _one_like(vals[0]) if vals else Fraction(1)
    return _slope_from_matrix(matrix, data.kappa, numeric, tol, one)


def slope_seifert(theta, kappa, omega, *, tol: float = NUMERIC_TOL) -> SlopeValue:
    """One-color slope straight from a Seifert matrix.

    Classifies kappa against A(omega) = theta - omega * theta^T; a
    preimage alpha gives -(1 - omega) * <alpha, kappa>.  Scaling A by
    1/(1 - omega) shows this agrees with ``slope_c_complex`` on the
    wrapped datum, but the two are computed independently.
    """
    report = validate_realizability(theta)
    if not report["ok"]:
        raise PreconditionError(
            "theta - theta^T has invariant factors "
            f"{report['invariant_factors']}; not a Seifert form")
    data = CComplexData.from_seifert(theta, kappa=kappa)
    vals, numeric = _character_values(omega, 1)
    _require_regular(vals, numeric, tol)
    matrix = a_matrix(data, omega, tol=tol)
    one = _one_like(vals[0])
    return _slope_from_matrix(matrix, data.kappa, numeric, tol, one - vals[0])


# -- signature and nullity ---------------------------------------------------------


def _require_unitary(vals, numeric: bool, tol: float):
    for i, v in enumerate(vals):
        if numeric:
            if abs(abs(v) - 1) > tol:
                raise PreconditionError(
                    f"character coordinate {i + 1} is not on the unit circle")
        elif isinstance(v, CyclotomicElement):
            if v * v.conjugate() != 1:
                raise PreconditionError(
                    f"character coordinate {i + 1} is not on the unit circle")
        elif isinstance(v, Fraction):
            if v * v != 1:
                raise PreconditionError(
                    f"character coordinate {i + 1} is not on the unit circle")
        else:
            raise PreconditionError(
                "signature needs a concrete unitary character")


def signature_nullity(data: CComplexData, omega, *, tol: float = NUMERIC_TOL):
    """Signature and nullity of the colored link at a unitary character.

    The signature is the inertia signature of the Hermitian E(omega); the
    nullity is the kernel dimension of E(omega) plus b0 - 1.  Returns a
    pair of integers.
    """
    vals, numeric = _character_values(omega, data.mu)
    _require_unitary(vals, numeric, tol)
    _require_regular(vals, numeric, tol)
    matrix = e_matrix(data, omega, tol=tol)
    if not matrix:
        return 0, data.b0 - 1
    if numeric:
        import numpy as np

        arr = np.array(matrix, dtype=complex)
        if np.max(np.abs(arr - arr.conj().T)) > tol:
            raise PreconditionError("E(omega) is not Hermitian within tolerance")
        eigs = np.linalg.eigvalsh(arr)
        pos = int(np.sum(eigs > tol))
        neg = int(np.sum(eigs < -tol))
        sig, kdim = pos - neg, len(matrix) - pos - neg
    else:
        sig, kdim = hermitian_signature(matrix, tol)
    return sig, kdim + data.b0 - 1


# -- realizability ------------------------------------------------------------------


def validate_realizability(theta) -> dict:
    """Check that an integer matrix is a Seifert form of some colored link.

    The test is on the invariant factors of theta - theta^T: all nonzero
    ones must be 1.  On success the report carries r (half the rank of the
    skew part) and the bound rank - 2r + 1 on the number of components of
    a realizing link.
    """
    rows = [list(row) for row in theta]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise PreconditionError("theta must be a square matrix")
    skew = [[int(rows[i][j]) - int(rows[j][i]) for j in range(n)] for i in range(n)]
    invariants = smith_invariants(skew)
    ok = all(d == 1 for d in invariants)
    report = {"ok": ok, "invariant_factors": invariants}
    if ok:
        r = len(invariants) // 2
        report["r"] = r
        report["component_bound"] = n - 2 * r + 1
    return report
