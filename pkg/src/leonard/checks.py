"""The named invariant checks run by ``leonard verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import askey, oracle
from .bracket import beta_from_sequence, check_brackets_nonzero, cross_ratio_identity_check
from .labels import ALL_LABELS
from .matrix import Matrix
from .params import ALL_D4, ParameterArray, local_scalars_both, relative, validate
from .system_rep import (
    charpoly_matches,
    classify_shape,
    expected_shape,
    representation,
    tilde_identities,
    verify_leonard_conditions,
)
from .transitions import (
    EpsilonConfig,
    adjacent_pairs,
    relation_cycles,
    transition_adjacent,
    verify_intertwiner,
    walk_weight,
)

DEFAULT_MAX_DEEP_D = 5
GENERATION_MAX_D = 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    labels: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"CHECK {self.name} {self.labels or '-'} {'PASS' if self.ok else 'FAIL'}"


def _guard(name: str, labels: str, fn: Callable[[], bool]) -> CheckResult:
    try:
        return CheckResult(name, labels, bool(fn()))
    except (ArithmeticError, ValueError, AssertionError) as exc:
        return CheckResult(name, labels, False, f"{type(exc).__name__}: {exc}")


def closed_form_checks(pa: ParameterArray, eps: EpsilonConfig | None = None) -> Iterator[CheckResult]:
    yield _guard("validate", "", lambda: validate(pa).ok)

    def scalars() -> bool:
        first, second = local_scalars_both(pa)
        return first == second

    yield _guard("local-scalars", "", scalars)

    if pa.d >= 3:
        def beta_ok() -> bool:
            b = beta_from_sequence(pa.theta)
            return (b == beta_from_sequence(pa.theta_star) and check_brackets_nonzero(pa.d, b)
                    and cross_ratio_identity_check(pa.theta, b)
                    and cross_ratio_identity_check(pa.theta_star, b))

        yield _guard("beta", "", beta_ok)

    yield _guard("relatives", "", lambda: all(validate(relative(pa, g)).ok for g in ALL_D4))

    n = pa.d + 1
    ident = Matrix.identity(pa.field, n)
    for g in ALL_LABELS:
        def shape(g=g) -> bool:
            rep = representation(pa, g)
            if pa.d == 0:
                return rep.A.is_diagonal() and rep.A_star.is_diagonal()
            return (classify_shape(rep.A), classify_shape(rep.A_star)) == expected_shape(g)

        def spectrum(g=g) -> bool:
            rep = representation(pa, g)
            return charpoly_matches(rep.A, list(pa.theta)) and charpoly_matches(rep.A_star, list(pa.theta_star))

        yield _guard("shape", str(g), shape)
        yield _guard("spectrum", str(g), spectrum)

    for g, h in adjacent_pairs():
        def inter(g=g, h=h) -> bool:
            T = transition_adjacent(pa, g, h, eps)
            return verify_intertwiner(pa, g, h, T) and T @ transition_adjacent(pa, h, g, eps) == ident

        yield _guard("transition", f"{g},{h}", inter)

    for g in ALL_LABELS:
        yield _guard("relations", str(g),
                     lambda g=g: all(walk_weight(pa, w, eps) == ident for w in relation_cycles(g)))

    yield _guard("leonard-conditions", "", lambda: verify_leonard_conditions(pa))
    yield _guard("tilde-identities", "", lambda: all(tilde_identities(pa).values()))

    def askey_all() -> bool:
        data = askey.askey_data(pa)
        return (askey.inverse_identity_check(pa, data) and askey.trace_identity_check(pa)
                and askey.orthogonality_check(pa, data) and askey.recurrence_check(pa, data)
                and askey.row_sum_check(pa))

    yield _guard("askey", "", askey_all)
    yield _guard("askey-walk", ",".join(map(str, askey.P_WALK.labels)), lambda: askey.walk_identity_check(pa))


def oracle_checks(pa: ParameterArray, eps: EpsilonConfig | None = None) -> Iterator[CheckResult]:
    try:
        M = oracle.build_module(pa, eps)
        bases = oracle.all_bases(M)
    except (ArithmeticError, ValueError, AssertionError) as exc:
        yield CheckResult("oracle-module", "", False, str(exc))
        return
    yield CheckResult("oracle-module", "", True)
    for g in ALL_LABELS:
        def rep_ok(g=g) -> bool:
            closed = representation(pa, g)
            return oracle.representation_direct(M, bases[g]) == (closed.A, closed.A_star)

        yield _guard("oracle-representation", str(g), rep_ok)
        yield _guard("oracle-subspaces", str(g), lambda g=g: oracle.verify_subspace_memberships(M, bases[g]))
    for g, h in adjacent_pairs():
        yield _guard("oracle-transition", f"{g},{h}",
                     lambda g=g, h=h: oracle.transition_direct(M, bases[g], bases[h])
                     == transition_adjacent(pa, g, h, M.eps))
    yield _guard("oracle-flags", "", lambda: oracle.verify_opposite_flags(M))
    yield _guard("oracle-split", "", lambda: oracle.verify_split_decomposition(M))
    if pa.d <= GENERATION_MAX_D:
        yield _guard("oracle-generation", "", lambda: oracle.verify_generation(M))


def run_checks(
    pa: ParameterArray,
    *,
    deep: bool = False,
    max_d: int = DEFAULT_MAX_DEEP_D,
    eps: EpsilonConfig | None = None,
) -> list[CheckResult]:
    results = list(closed_form_checks(pa, eps))
    if not results[0].ok:
        # everything downstream presumes a valid array
        return results[:1]
    if deep and pa.d <= max_d:
        results.extend(oracle_checks(pa, eps))
    return results
