"""Characters, admissibility, the index and defect functions, parsing."""

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from linkslope.characters import (
    Character, admissible_components, defect, enumerate_unitary_admissible,
    ind, is_admissible, is_concordance_root, parse_character,
)
from linkslope.errors import ParseError, PreconditionError

F = Fraction


def test_exact_character_canonicalizes():
    a = Character.exact(4, [2, 2])
    b = Character.exact(2, [1, 1])
    assert a == b and hash(a) == hash(b)
    assert a.conductor == 2 and a.exponents == (1, 1)
    assert a.coordinate_order(0) == 2
    assert a.mu == 2 and a.is_exact()


def test_character_values_and_logs():
    ch = Character.exact(6, [1, 5])
    vals = ch.values()
    assert vals[0] * vals[1] == vals[0].one_like()
    assert ch.log_exact(0) == F(1, 6)
    assert ch.log_exact(1) == F(5, 6)
    nums = ch.values_complex()
    assert abs(nums[0] - cmath.exp(2j * cmath.pi / 6)) < 1e-12


def test_minus_ones_and_inverse():
    ch = Character.minus_ones(3)
    assert ch == Character.exact(2, [1, 1, 1])
    assert ch.inverse() == ch
    z = Character.exact(5, [2])
    assert z.inverse() == Character.exact(5, [3])


def test_drop_and_trivial_coordinates():
    ch = Character.exact(6, [2, 0])
    assert ch.coordinate_is_one(1) and not ch.coordinate_is_one(0)
    assert ch.drop(1) == Character.exact(3, [1])


def test_symbolic_and_numeric_kinds():
    sym = Character.symbolic(("t1", "t2"))
    assert sym.mu == 2 and not sym.is_exact()
    num = Character.numeric([-1.0, 1j])
    assert num.mu == 2
    assert not num.coordinate_is_one(0)


def test_describe_is_readable():
    text = Character.exact(3, [1]).describe()
    assert "zeta(3)" in text


# --- admissibility ----------------------------------------------------------


def test_is_admissible_exact():
    lam = (2, -1)
    assert is_admissible(lam, Character.exact(5, [1, 2]))
    assert not is_admissible(lam, Character.exact(5, [1, 1]))
    assert is_admissible((0, 0), Character.exact(7, [3, 4]))
    with pytest.raises(PreconditionError):
        is_admissible((1,), Character.exact(3, [1, 1]))


def test_is_admissible_numeric_and_symbolic():
    lam = (1, 1)
    w = cmath.exp(2j * cmath.pi / 3)
    assert is_admissible(lam, Character.numeric([w, w.conjugate()]))
    assert not is_admissible(lam, Character.numeric([w, w]))
    assert is_admissible((0, 0), Character.symbolic(("t1", "t2")))
    assert not is_admissible((1, 0), Character.symbolic(("t1", "t2")))


def test_admissible_components_zero_vector():
    var = admissible_components((0, 0))
    assert var.full_torus


def test_admissible_components_structure():
    var = admissible_components((6, -6))
    assert not var.full_torus
    assert var.N == 6 and var.nu == (1, -1)
    comps = dict(var.components)
    assert sorted(comps) == [1, 2, 3, 6]
    assert comps[1] and comps[2] and comps[3]
    assert not comps[6]


def test_enumerate_unitary_admissible():
    chars = enumerate_unitary_admissible((2,), 12)
    assert Character.exact(2, [1]) in chars
    for ch in chars:
        assert is_admissible((2,), ch)
        assert all(not ch.coordinate_is_one(i) for i in range(ch.mu))
    # a unit linking number admits no nontrivial character at all
    assert enumerate_unitary_admissible((1,), 12) == []
    free = enumerate_unitary_admissible((0,), 6)
    orders = {ch.coordinate_order(0) for ch in free}
    assert orders == {2, 3, 4, 5, 6}
    with pytest.raises(PreconditionError):
        enumerate_unitary_admissible((1,), 1)


# --- concordance roots -------------------------------------------------------


def test_is_concordance_root():
    assert is_concordance_root(Character.exact(2, [1])) == "no"
    assert is_concordance_root(Character.exact(9, [1])) == "no"
    assert is_concordance_root(Character.exact(6, [1])) == "yes"
    assert is_concordance_root(Character.exact(6, [1, 2])) == "yes"
    assert is_concordance_root(Character.exact(4, [1, 1])) == "no"
    assert is_concordance_root(Character.exact(8, [1, 3])) == "unknown"
    with pytest.raises(PreconditionError):
        is_concordance_root(Character.numeric([-1.0]))


# --- ind and defect ----------------------------------------------------------


def test_ind_values():
    assert ind(F(3)) == 6
    assert ind(F(-3)) == -6
    assert ind(F(1, 2)) == 1
    assert ind(F(-1, 2)) == -1
    assert ind(F(7, 3)) == 5
    assert ind(0) == 0


def test_defect_examples():
    lam = (1, 1)
    assert defect(lam, Character.exact(3, [2, 2])) == 1
    assert defect(lam, Character.exact(3, [1, 1])) == -1
    assert defect(lam, Character.exact(5, [1, 4])) == 0
    with pytest.raises(PreconditionError):
        defect(lam, Character.numeric([-1.0, -1.0]))


@given(st.fractions(min_value=-20, max_value=20, max_denominator=12))
@settings(max_examples=80, deadline=None)
def test_ind_antisymmetry(x):
    assert ind(-x) == -ind(x)
    assert ind(x) in (2 * (ind(x) // 2), ind(x))  # always an integer


@given(st.integers(min_value=2, max_value=12),
       st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=3),
       st.data())
@settings(max_examples=80, deadline=None)
def test_defect_is_an_integer(n, lam, data):
    ks = [data.draw(st.integers(min_value=1, max_value=n - 1))
          for _ in lam]
    ch = Character.exact(n, ks)
    got = defect(lam, ch)
    assert isinstance(got, int)
    # anti-symmetry under conjugation when no coordinate is degenerate
    inv = ch.inverse()
    if all(not inv.coordinate_is_one(i) for i in range(inv.mu)):
        assert defect(lam, inv) == -got


# --- parsing -----------------------------------------------------------------


def test_parse_character_exact():
    assert parse_character("zeta(6)^1, zeta(6)^5") == Character.exact(6, [1, 5])
    assert parse_character("-1") == Character.exact(2, [1])
    assert parse_character("(zeta(3), zeta(3)^2)") == Character.exact(3, [1, 2])
    assert parse_character("1") == Character.exact(1, [0])


def test_parse_character_mixed_conductors():
    ch = parse_character("zeta(4), zeta(6)")
    assert ch == Character.exact(12, [3, 2])


def test_parse_character_numeric_and_symbolic():
    ch = parse_character("-0.5+0.866i, 1i")
    assert ch.mu == 2 and not ch.is_exact()
    sym = parse_character("t1, t2")
    assert sym.kind == "symbolic"


def test_parse_character_rejects_junk():
    with pytest.raises(ParseError):
        parse_character("")
    with pytest.raises(ParseError):
        parse_character("zeta(3), banana")
