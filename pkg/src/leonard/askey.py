"""Polynomial data attached to a parameter array: the matrices P, P*, the
weights k_j, k*_j and the scalar nu, together with their identities."""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement
from .labels import BasisLabel
from .matrix import Matrix
from .params import ParameterArray, local_scalars
from .system_rep import primitive_idempotent, representation
from .transitions import EpsilonConfig, Walk, walk_weight


def _diffs(seq, x: int, ks, one: FieldElement) -> FieldElement:
    acc = one
    for k in ks:
        acc = acc * (seq(x) - seq(k))
    return acc


def p_poly_value(pa: ParameterArray, i: int, j: int) -> FieldElement:
    """sum_n (theta_i - theta_0)...(theta_i - theta_{n-1}) (theta*_j - theta*_0)...(theta*_j - theta*_{n-1}) / (varphi_1...varphi_n)."""
    one = pa.field.one
    total = pa.field.zero
    for n in range(pa.d + 1):
        total = total + (_diffs(pa.th, i, range(n), one) * _diffs(pa.ths, j, range(n), one)
                         / pa.varphi_product(range(1, n + 1)))
    return total


def weight_k(pa: ParameterArray, j: int) -> FieldElement:
    one = pa.field.one
    d = pa.d
    ratio = pa.varphi_product(range(1, j + 1)) / pa.phi_product(range(1, j + 1))
    return (ratio * _diffs(pa.ths, 0, range(1, d + 1), one)
            / _diffs(pa.ths, j, [k for k in range(d + 1) if k != j], one))


def weight_k_star(pa: ParameterArray, j: int) -> FieldElement:
    one = pa.field.one
    d = pa.d
    ratio = pa.varphi_product(range(1, j + 1)) / pa.phi_product(range(d - j + 1, d + 1))
    return (ratio * _diffs(pa.th, 0, range(1, d + 1), one)
            / _diffs(pa.th, j, [k for k in range(d + 1) if k != j], one))


def nu(pa: ParameterArray) -> FieldElement:
    one = pa.field.one
    d = pa.d
    return _diffs(pa.th, 0, range(1, d + 1), one) * _diffs(pa.ths, 0, range(1, d + 1), one) / pa.phi_total


@dataclass(frozen=True)
class AskeyData:
    poly: Matrix  # unnormalised polynomial values, row i = theta_i, column j = theta*_j
    P: Matrix
    P_star: Matrix
    k: tuple[FieldElement, ...]
    k_star: tuple[FieldElement, ...]
    nu: FieldElement


def askey_data(pa: ParameterArray) -> AskeyData:
    f = pa.field
    n = pa.d + 1
    poly = Matrix.build(f, n, lambda i, j: p_poly_value(pa, i, j))
    k = tuple(weight_k(pa, j) for j in range(n))
    ks = tuple(weight_k_star(pa, j) for j in range(n))
    P = Matrix.build(f, n, lambda i, j: k[j] * poly[i, j])
    PS = Matrix.build(f, n, lambda i, j: ks[j] * poly[j, i])
    return AskeyData(poly, P, PS, k, ks, nu(pa))


def inverse_identity_check(pa: ParameterArray, data: AskeyData | None = None) -> bool:
    """P P* == nu I == P* P."""
    data = data or askey_data(pa)
    target = Matrix.identity(pa.field, pa.d + 1).scale(data.nu)
    return data.P @ data.P_star == target and data.P_star @ data.P == target


def trace_identity_check(pa: ParameterArray) -> bool:
    """nu * tr(E_0 E*_0) == 1, computed in the split basis."""
    from .system_rep import split_matrices

    A, AS = split_matrices(pa)
    E0 = primitive_idempotent(A, list(pa.theta), 0)
    E0s = primitive_idempotent(AS, list(pa.theta_star), 0)
    return nu(pa) * (E0 @ E0s).trace() == 1


def orthogonality_check(pa: ParameterArray, data: AskeyData | None = None) -> bool:
    data = data or askey_data(pa)
    n = pa.d + 1
    poly = data.poly
    zero = pa.field.zero
    for i in range(n):
        for j in range(n):
            s1 = sum((poly[i, m] * poly[j, m] * data.k[m] for m in range(n)), zero)
            s2 = sum((poly[m, i] * poly[m, j] * data.k_star[m] for m in range(n)), zero)
            if i == j:
                if s1 != data.nu / data.k_star[i] or s2 != data.nu / data.k[i]:
                    return False
            elif s1 or s2:
                return False
    return True


def recurrence_check(pa: ParameterArray, data: AskeyData | None = None) -> bool:
    """B* P == P H* and B P* == P* H, where (H, B*) represent (A, A*) in d*0*0d
    and (B, H*) represent them in d00*d*."""
    data = data or askey_data(pa)
    std = representation(pa, "d*0*0d")
    dual = representation(pa, "d00*d*")
    H, B_star = std.A, std.A_star
    B, H_star = dual.A, dual.A_star
    return B_star @ data.P == data.P @ H_star and B @ data.P_star == data.P_star @ H


def row_sum_check(pa: ParameterArray) -> bool:
    """Rows of the tridiagonal matrix in d00*d* sum to theta_0 (likewise dual)."""
    dual = representation(pa, "d00*d*")
    std = representation(pa, "d*0*0d")
    zero = pa.field.zero
    return all(sum(r, zero) == pa.th(0) for r in dual.A.rows) and all(
        sum(r, zero) == pa.ths(0) for r in std.A_star.rows
    )


# P as a walk weight

P_WALK = Walk.parse(["d*0*0d", "d*00*d", "0d*0*d", "0d*d0*", "0dd*0*", "d0d*0*", "d00*d*"])


@dataclass(frozen=True)
class WalkReconciliation:
    """How the walk weight from d*0*0d to d00*d* relates to P.

    The weight depends on the normalising scalars only through eps0/eps*0.
    ``implied_ratio`` is the value of that ratio forced by P[0,0] == 1, and
    ``predicted_ratio`` the value forced by eta*_0 == E*_0 eta_0.
    """

    implied_ratio: FieldElement
    predicted_ratio: FieldElement
    weight: Matrix

    @property
    def consistent(self) -> bool:
        return self.implied_ratio == self.predicted_ratio


def reconcile_walk(pa: ParameterArray) -> WalkReconciliation:
    f = pa.field
    base = walk_weight(pa, P_WALK, EpsilonConfig.ones(f))
    implied = base[0, 0].inverse()
    predicted = _diffs(pa.ths, 0, range(1, pa.d + 1), f.one)
    eps = EpsilonConfig(predicted, f.one, f.one, f.one)
    return WalkReconciliation(implied, predicted, walk_weight(pa, P_WALK, eps))


def walk_identity_check(pa: ParameterArray, data: AskeyData | None = None) -> bool:
    data = data or askey_data(pa)
    rec = reconcile_walk(pa)
    return rec.consistent and rec.weight == data.P


def local_scalar_sums_check(pa: ParameterArray) -> bool:
    """sum a_i == sum theta_i and sum a*_i == sum theta*_i (traces of A and A*)."""
    sc = local_scalars(pa)
    zero = pa.field.zero
    return (sum(sc.a, zero) == sum(pa.theta, zero)
            and sum(sc.a_star, zero) == sum(pa.theta_star, zero))


def labels_for_walk() -> tuple[BasisLabel, ...]:
    return P_WALK.labels
