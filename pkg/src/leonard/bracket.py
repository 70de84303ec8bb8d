"""Symmetric q-brackets expressed through beta = q + 1/q.

``q`` itself is never needed: the integer bracket satisfies
``[n+2] = beta*[n] - [n-2]`` with seeds ``[0] = 0, [2] = 1`` (even n) and
``[-1] = -1, [1] = 1`` (odd n), and ``[-n] = -[n]``.  These seeds also give
the right values in characteristic 2.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .field import Field, FieldElement


class BracketError(ValueError):
    """A bracket quotient would divide by zero, or beta is missing."""


@lru_cache(maxsize=4096)
def bracket(n: int, beta: FieldElement) -> FieldElement:
    """The integer bracket ``[n]`` as an element of ``beta.field``."""
    if n < 0:
        return -bracket(-n, beta)
    field = beta.field
    if n % 2 == 0:
        prev, cur, k = field.zero, field.one, 2  # [0], [2]
        if n == 0:
            return prev
    else:
        prev, cur, k = -field.one, field.one, 1  # [-1], [1]
    while k < n:
        prev, cur = cur, beta * cur - prev
        k += 2
    return cur


def bracket_factorial(n: int, beta: FieldElement) -> FieldElement:
    acc = beta.field.one
    for i in range(1, n + 1):
        acc = acc * bracket(i, beta)
    return acc


def check_brackets_nonzero(d: int, beta: FieldElement) -> bool:
    """True when ``[1], ..., [d]`` are all nonzero."""
    return all(bracket(i, beta) for i in range(1, d + 1))


def triple_bracket(
    r: int, s: int, t: int, beta: FieldElement | None = None, *, field: Field | None = None
) -> FieldElement:
    """``[r, s, t]`` for nonnegative r, s, t.

    Equals 1 whenever an argument is zero, so beta may be omitted then
    (pass ``field`` instead).  Otherwise the factorial quotient needs
    ``[1..r+s+t]`` nonzero.
    """
    if min(r, s, t) < 0:
        raise ValueError("triple bracket arguments must be nonnegative")
    if beta is None:
        if field is None:
            raise BracketError("need beta or field")
        if min(r, s, t) == 0:
            return field.one
        raise BracketError(f"[{r},{s},{t}] needs beta")
    if min(r, s, t) == 0:
        return beta.field.one
    if not check_brackets_nonzero(r + s + t, beta):
        raise BracketError(f"[{r},{s},{t}]: a bracket below {r + s + t + 1} vanishes")
    f = lambda n: bracket_factorial(n, beta)  # noqa: E731
    num = f(r + s) * f(r + t) * f(s + t)
    if r % 2 and s % 2 and t % 2:
        num = num * (beta + 2)
    return num / (f(r) * f(s) * f(t) * f(r + s + t))


def beta_from_sequence(seq: Sequence[FieldElement]) -> FieldElement | None:
    """Recover beta from a sequence with ``(s[i-2]-s[i+1]) / (s[i-1]-s[i]) = beta + 1``.

    Returns None when the sequence has fewer than four terms, since then
    beta is unconstrained.  Raises ValueError if the ratio is undefined or
    not constant.
    """
    d = len(seq) - 1
    if d <= 2:
        return None
    ratios = set()
    for i in range(2, d):
        den = seq[i - 1] - seq[i]
        if not den:
            raise ValueError(f"consecutive terms {i - 1}, {i} coincide")
        ratios.add((seq[i - 2] - seq[i + 1]) / den)
    if len(ratios) != 1:
        raise ValueError("sequence is not beta-recurrent")
    return ratios.pop() - 1


def is_beta_recurrent(seq: Sequence[FieldElement], beta: FieldElement) -> bool:
    """``s[i-1] - beta*s[i] + s[i+1]`` is independent of i."""
    vals = {seq[i - 1] - beta * seq[i] + seq[i + 1] for i in range(1, len(seq) - 1)}
    return len(vals) <= 1


def cross_ratio_identity_check(seq: Sequence[FieldElement], beta: FieldElement) -> bool:
    """``[r-s](s_i - s_j) == [i-j](s_r - s_s)`` whenever ``i + j == r + s``."""
    d = len(seq) - 1
    for i in range(d + 1):
        for j in range(d + 1):
            for r in range(d + 1):
                s = i + j - r
                if not 0 <= s <= d:
                    continue
                lhs = bracket(r - s, beta) * (seq[i] - seq[j])
                rhs = bracket(i - j, beta) * (seq[r] - seq[s])
                if lhs != rhs:
                    return False
    return True
