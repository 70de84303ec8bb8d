from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from leonard.bracket import (
    BracketError,
    beta_from_sequence,
    bracket,
    check_brackets_nonzero,
    cross_ratio_identity_check,
    is_beta_recurrent,
    triple_bracket,
)
from leonard.field import GF, Q


def b(x):
    return Q(Fraction(x))


def test_small_brackets():
    beta = b(Fraction(7, 3))
    assert bracket(0, beta) == 0
    assert bracket(1, beta) == 1
    assert bracket(2, beta) == 1
    assert bracket(3, beta) == beta + 1
    assert bracket(4, beta) == beta
    assert bracket(5, beta) == beta**2 + beta - 1
    assert bracket(-3, beta) == -(beta + 1)


def test_q_equals_one_values():
    # beta = 2: odd n give n, even n give n/2
    assert [bracket(n, b(2)) for n in range(1, 9)] == [1, 1, 3, 2, 5, 3, 7, 4]


def test_q_equals_minus_one_values():
    assert [bracket(n, b(-2)) for n in range(1, 9)] == [1, 1, -1, -2, 1, 3, -1, -4]


def test_characteristic_two_sequence():
    zero = GF(2)(0)
    assert [bracket(n, zero).value for n in range(1, 13)] == [1, 1, 1, 0] * 3
    assert check_brackets_nonzero(3, zero)
    assert not check_brackets_nonzero(4, zero)
    assert triple_bracket(1, 1, 1, zero) == 0
    assert triple_bracket(1, 0, 2, zero) == 1


def test_triple_bracket_values():
    assert triple_bracket(1, 1, 1, b(2)) == b(Fraction(4, 3))
    assert triple_bracket(1, 1, 1, b(-2)) == 0
    assert triple_bracket(1, 1, 2, b(2)) == b(Fraction(3, 2))
    assert triple_bracket(0, 5, 2, b(9)) == 1


def test_triple_bracket_without_beta():
    assert triple_bracket(0, 2, 1, None, field=Q) == 1
    with pytest.raises(BracketError):
        triple_bracket(1, 1, 1, None, field=Q)


def test_triple_bracket_rejects_vanishing_brackets():
    # beta = 0 over Q is q = i: [4] = beta = 0
    with pytest.raises(BracketError):
        triple_bracket(2, 1, 1, b(0))


def _q_bracket(n: int, t: Fraction) -> Fraction:
    """[n] for q = t^2 from the defining quotients."""
    m = abs(n)
    num = t**m - t**-m
    den = (t**2 - t**-2) if m % 2 == 0 else (t - 1 / t)
    return (num / den) * (1 if n >= 0 else -1)


@given(st.integers(-15, 15), st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9))
def test_recurrence_matches_q_quotients(n, t):
    if t == 1:
        return
    beta = Q(t**2 + t**-2)
    assert bracket(n, beta) == Q(_q_bracket(n, t))


def _qpoch(q: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= 1 - q**k
    return out


@pytest.mark.parametrize("q", [Fraction(2), Fraction(3, 5), Fraction(-7, 2)])
def test_triple_bracket_matches_q_pochhammer_form(q):
    beta = Q(q + 1 / q)
    for r in range(5):
        for s in range(5):
            for t in range(5):
                if r + s + t > 8:
                    continue
                want = (_qpoch(q, r + s) * _qpoch(q, r + t) * _qpoch(q, s + t)
                        / (_qpoch(q, r) * _qpoch(q, s) * _qpoch(q, t) * _qpoch(q, r + s + t)))
                assert triple_bracket(r, s, t, beta) == Q(want)


def test_triple_bracket_factorial_form_at_q_one():
    for r in range(5):
        for s in range(5):
            for t in range(5):
                want = Fraction(factorial(r + s) * factorial(r + t) * factorial(s + t),
                                factorial(r) * factorial(s) * factorial(t) * factorial(r + s + t))
                assert triple_bracket(r, s, t, b(2)) == Q(want)


def test_triple_bracket_at_q_minus_one():
    f = factorial
    for r in range(5):
        for s in range(5):
            for t in range(5):
                got = triple_bracket(r, s, t, b(-2))
                if r % 2 and s % 2 and t % 2:
                    assert got == 0
                else:
                    want = Fraction(f((r + s) // 2) * f((r + t) // 2) * f((s + t) // 2),
                                    f(r // 2) * f(s // 2) * f(t // 2) * f((r + s + t) // 2))
                    assert got == Q(want)


@given(st.integers(-20, 20), st.fractions(max_denominator=7))
def test_antisymmetry_and_recurrence(n, beta):
    beta = Q(beta)
    assert bracket(-n, beta) == -bracket(n, beta)
    assert bracket(n + 2, beta) == beta * bracket(n, beta) - bracket(n - 2, beta)


@pytest.mark.parametrize("beta", [Fraction(7, 3), Fraction(-5, 2), Fraction(11)])
def test_three_term_identity(beta):
    beta = Q(beta)
    for r in range(1, 7):
        for s in range(1, 7):
            for t in range(1, 7):
                if r + s + t > 8:
                    continue
                lhs = bracket(r - t, beta) / bracket(r + t, beta) * triple_bracket(r, s - 1, t, beta)
                rhs = triple_bracket(r - 1, s, t, beta) - triple_bracket(r, s, t - 1, beta)
                assert lhs == rhs, (r, s, t)


def test_beta_from_sequence():
    seq = [Q(4 - 2 * i) for i in range(5)]
    assert beta_from_sequence(seq) == 2
    assert beta_from_sequence(seq[:3]) is None
    with pytest.raises(ValueError):
        beta_from_sequence([Q(x) for x in (0, 1, 1, 6)])
    with pytest.raises(ValueError):
        beta_from_sequence([Q(x) for x in (0, 1, 3, 2, 100)])


def test_cross_ratio_identity_on_linear_sequence():
    seq = [Q(4 - 2 * i) for i in range(5)]
    assert cross_ratio_identity_check(seq, Q(2))
    assert not cross_ratio_identity_check(seq, Q(3))


@given(st.fractions(max_denominator=5), st.lists(st.integers(-9, 9), min_size=3, max_size=3),
       st.integers(3, 8))
def test_recurrent_sequences_satisfy_cross_ratio(beta, start, d):
    beta = Q(beta)
    seq = [Q(x) for x in start]
    gamma = seq[0] - beta * seq[1] + seq[2]
    while len(seq) < d + 1:
        seq.append(gamma + beta * seq[-1] - seq[-2])
    assert is_beta_recurrent(seq, beta)
    assert cross_ratio_identity_check(seq, beta)
