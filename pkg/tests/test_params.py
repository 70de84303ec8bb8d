from fractions import Fraction

import pytest
from hypothesis import given, settings

from corpus import GENERIC_D4, fixtures, valid_arrays
from leonard.families import krawtchouk_array
from leonard.field import GF, Q
from leonard.params import (
    ALL_D4,
    DOWN,
    DOWN2,
    IDENTITY,
    STAR,
    D4Element,
    ParameterArray,
    ParameterFileError,
    format_parameter_file,
    local_scalars,
    local_scalars_both,
    parse_parameter_file,
    relative,
    validate,
)


def test_krawtchouk_three_is_valid():
    pa = krawtchouk_array(3)
    assert validate(pa).ok
    assert pa.varphi == (-6, -8, -6)
    assert pa.phi == (6, 8, 6)


def test_trivial_diameter_zero():
    pa = ParameterArray.from_values(Q, [5], [7], [], [])
    assert validate(pa).ok
    sc = local_scalars(pa)
    assert sc.a == (5,) and sc.a_star == (7,)


def _perturb(pa, which, index, delta=1):
    seqs = {k: list(getattr(pa, k)) for k in ("theta", "theta_star", "varphi", "phi")}
    seqs[which][index] = seqs[which][index] + delta
    return ParameterArray(pa.field, *(tuple(seqs[k]) for k in ("theta", "theta_star", "varphi", "phi")))


def test_condition_one_reports_zero_entries():
    pa = krawtchouk_array(3)
    bad = _perturb(pa, "varphi", 1, 8)  # varphi_2 = 0
    assert "i" in validate(bad).conditions()


def test_condition_two_reports_repeats():
    pa = krawtchouk_array(3)
    bad = _perturb(pa, "theta", 1, 2)  # theta_1 == theta_0
    assert "ii" in validate(bad).conditions()


def test_condition_three_and_four():
    pa = krawtchouk_array(3)
    bad = _perturb(pa, "varphi", 2, 1)
    assert validate(bad).conditions() == {"iii"}
    bad = _perturb(pa, "phi", 0, 1)
    rep = validate(bad)
    assert "iii" in rep.conditions()  # phi_1 also feeds the varphi formula
    bad = _perturb(pa, "phi", 2, 1)
    assert validate(bad).conditions() == {"iv"}


def test_condition_five():
    # theta* not recurrent with the same beta as theta
    pa = parse_parameter_file(GENERIC_D4)
    bad = _perturb(pa, "theta_star", 4, 1)
    assert "v" in validate(bad).conditions()


def test_perturbing_any_entry_breaks_validity():
    pa = parse_parameter_file(GENERIC_D4)
    for which in ("theta", "theta_star", "varphi", "phi"):
        for i in range(len(getattr(pa, which))):
            assert not validate(_perturb(pa, which, i, Fraction(1, 3))).ok, (which, i)


def test_star_relative_example():
    pa = krawtchouk_array(3)
    r = relative(pa, STAR)
    assert r.theta == pa.theta_star and r.theta_star == pa.theta
    assert r.varphi == pa.varphi and r.phi == tuple(reversed(pa.phi))


def test_down_relatives_example():
    pa = parse_parameter_file(GENERIC_D4)
    r = relative(pa, DOWN)
    assert r.theta == pa.theta and r.theta_star == tuple(reversed(pa.theta_star))
    assert r.varphi == tuple(reversed(pa.phi)) and r.phi == tuple(reversed(pa.varphi))
    r = relative(pa, DOWN2)
    assert r.theta == tuple(reversed(pa.theta)) and r.theta_star == pa.theta_star
    assert r.varphi == pa.phi and r.phi == pa.varphi


def test_d4_group_structure():
    assert len(set(ALL_D4)) == 8
    for g in (STAR, DOWN, DOWN2):
        assert g.then(g) == IDENTITY
    assert DOWN2.then(STAR) == STAR.then(DOWN)
    assert DOWN.then(STAR) == STAR.then(DOWN2)
    assert DOWN.then(DOWN2) == DOWN2.then(DOWN)
    for g in ALL_D4:
        assert g.then(g.inverse()) == IDENTITY
        for h in ALL_D4:
            for k in ALL_D4:
                assert g.then(h).then(k) == g.then(h.then(k))
    # dihedral, not abelian
    assert STAR.then(DOWN) != DOWN.then(STAR)


@settings(max_examples=40, deadline=None)
@given(valid_arrays())
def test_d4_relations_on_arrays(pa):
    for word in (["*", "*"], ["down", "down"], ["Down", "Down"]):
        assert relative(pa, word) == pa
    assert relative(pa, ["Down", "*"]) == relative(pa, ["*", "down"])
    assert relative(pa, ["down", "*"]) == relative(pa, ["*", "Down"])
    assert relative(pa, ["down", "Down"]) == relative(pa, ["Down", "down"])
    for g in ALL_D4:
        assert relative(pa, g) == relative(pa, g.word)
        assert validate(relative(pa, g)).ok
        for h in ALL_D4:
            assert relative(relative(pa, g), h) == relative(pa, g.then(h))


@settings(max_examples=40, deadline=None)
@given(valid_arrays())
def test_local_scalar_expressions_agree(pa):
    first, second = local_scalars_both(pa)
    assert first == second
    assert sum(first.a, pa.field.zero) == sum(pa.theta, pa.field.zero)


def test_krawtchouk_local_scalars_vanish():
    for d in range(0, 8):
        sc = local_scalars(krawtchouk_array(d))
        assert all(x == 0 for x in sc.a + sc.a_star)


def test_local_scalars_example_d1():
    pa = ParameterArray.from_values(Q, [-7, 2], [-2, -1], [-6], [3])
    sc = local_scalars(pa)
    # a_0 = theta_0 + varphi_1 / (theta*_0 - theta*_1) = -7 + 6
    assert sc.a == (-1, -4)
    # a*_0 = theta*_0 + varphi_1 / (theta_0 - theta_1) = -2 + 2/3
    assert sc.a_star == (Fraction(-4, 3), Fraction(-5, 3))


@settings(max_examples=30, deadline=None)
@given(valid_arrays())
def test_file_round_trip(pa):
    assert parse_parameter_file(format_parameter_file(pa)) == pa


def test_file_comments_and_blank_lines():
    text = "# a comment\nfield: GF(7)\n\nd: 1  # diameter\ntheta: 1 2\ntheta_star: 3 4\nvarphi: 5\nphi: 6\n"
    pa = parse_parameter_file(text)
    assert pa.field == GF(7) and pa.d == 1 and pa.theta == (1, 2)


@pytest.mark.parametrize("text", [
    "field: Q\nd: 1\ntheta: 1 2\ntheta_star: 3 4\nvarphi: 5\n",
    "field: Q\nd: 1\ntheta: 1\ntheta_star: 3 4\nvarphi: 5\nphi: 6\n",
    "field: R\nd: 0\ntheta: 1\ntheta_star: 3\nvarphi:\nphi:\n",
    "field: Q\nd: x\ntheta: 1\ntheta_star: 3\nvarphi:\nphi:\n",
    "field: Q\nd: 0\ntheta: 1/0\ntheta_star: 3\nvarphi:\nphi:\n",
    "field: Q\nd: 0\nd: 0\ntheta: 1\ntheta_star: 3\nvarphi:\nphi:\n",
    "field: Q\nd: 0\ntheta 1\ntheta_star: 3\nvarphi:\nphi:\n",
])
def test_file_errors(text):
    with pytest.raises(ParameterFileError):
        parse_parameter_file(text)


def test_d4_element_printing():
    assert str(IDENTITY) == "1"
    assert str(D4Element(True, False, True)) == "↓*"


def test_every_fixture_validates():
    for name, pa in fixtures().items():
        assert validate(pa).ok, name
