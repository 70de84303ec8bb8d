"""Named families of parameter arrays and their classical closed forms."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial

from .field import Field, FieldElement, Q, Scalar
from .matrix import Matrix
from .params import ParameterArray, expected_phi, expected_varphi, validate


class FamilyError(ValueError):
    pass


def krawtchouk_array(d: int, field: Field = Q) -> ParameterArray:
    """theta_i = theta*_i = d - 2i, varphi_i = -2i(d-i+1), phi_i = 2i(d-i+1)."""
    if d < 0:
        raise FamilyError("d must be nonnegative")
    p = field.characteristic
    if p and (p == 2 or p <= d):
        raise FamilyError(f"Krawtchouk needs characteristic 0 or an odd prime above d; got {p}")
    eig = [d - 2 * i for i in range(d + 1)]
    return ParameterArray.from_values(
        field,
        eig,
        eig,
        [-2 * i * (d - i + 1) for i in range(1, d + 1)],
        [2 * i * (d - i + 1) for i in range(1, d + 1)],
    )


def krawtchouk_p(d: int, field: Field = Q) -> Matrix:
    """P_ij = binom(d, j) 2F1(-i, -j; -d; 2)."""
    def entry(i: int, j: int):
        total = field.zero
        for n in range(min(i, j) + 1):
            # (-x)_n = (-1)^n x(x-1)...(x-n+1); one sign survives the quotient
            num = _falling(i, n) * _falling(j, n) * (-2) ** n
            den = _falling(d, n) * factorial(n)
            total = total + field(num) / field(den)
        return field(comb(d, j)) * total

    return Matrix.build(field, d + 1, entry)


def _falling(x: int, n: int) -> int:
    out = 1
    for k in range(n):
        out *= x - k
    return out


@dataclass(frozen=True)
class QRacahParams:
    d: int
    q: FieldElement
    h: FieldElement
    h_star: FieldElement
    s: FieldElement
    s_star: FieldElement
    r1: FieldElement
    theta0: FieldElement
    theta0_star: FieldElement

    @classmethod
    def of(cls, field: Field, d: int, q: Scalar, h: Scalar, h_star: Scalar, s: Scalar,
           s_star: Scalar, r1: Scalar, theta0: Scalar = 0, theta0_star: Scalar = 0) -> "QRacahParams":
        return cls(d, *(field(x) for x in (q, h, h_star, s, s_star, r1, theta0, theta0_star)))

    @property
    def field(self) -> Field:
        return self.q.field

    @property
    def r2(self) -> FieldElement:
        return self.s * self.s_star * self.q ** (self.d + 1) / self.r1

    def dual(self) -> "QRacahParams":
        return QRacahParams(self.d, self.q, self.h_star, self.h, self.s_star, self.s, self.r1,
                            self.theta0_star, self.theta0)


def _q_eigen(theta0: FieldElement, h: FieldElement, s: FieldElement, q: FieldElement, i: int):
    return theta0 + h * (1 - q**i) * (1 - s * q ** (i + 1)) / q**i


def q_racah_unchecked(qp: QRacahParams) -> ParameterArray:
    """The closed-form arrays without validation, so callers can inspect which
    conditions fail for degenerate parameters."""
    d, q = qp.d, qp.q
    if d < 0:
        raise FamilyError("d must be nonnegative")
    if not q or not qp.r1:
        raise FamilyError("q and r1 must be nonzero")
    try:
        r2 = qp.r2
        theta = [_q_eigen(qp.theta0, qp.h, qp.s, q, i) for i in range(d + 1)]
        theta_s = [_q_eigen(qp.theta0_star, qp.h_star, qp.s_star, q, i) for i in range(d + 1)]
        hh = qp.h * qp.h_star
        varphi, phi = [], []
        for i in range(1, d + 1):
            common = hh * q ** (1 - 2 * i) * (1 - q**i) * (1 - q ** (i - d - 1))
            varphi.append(common * (1 - qp.r1 * q**i) * (1 - r2 * q**i))
            phi.append(common * (qp.r1 - qp.s_star * q**i) * (r2 - qp.s_star * q**i) / qp.s_star)
    except ZeroDivisionError as exc:
        raise FamilyError(f"q-Racah parameters are degenerate: {exc}") from None
    return ParameterArray(qp.field, tuple(theta), tuple(theta_s), tuple(varphi), tuple(phi))


def q_racah_array(qp: QRacahParams) -> ParameterArray:
    """The q-Racah parameter array; raises FamilyError if it is not valid."""
    pa = q_racah_unchecked(qp)
    rep = validate(pa)
    if not rep.ok:
        raise FamilyError("q-Racah parameters give an invalid array: " + "; ".join(map(str, rep.violations)))
    return pa


def q_pochhammer(a: FieldElement, q: FieldElement, n: int) -> FieldElement:
    out = a.field.one
    for k in range(n):
        out = out * (1 - a * q**k)
    return out


def q_racah_b_matrix(qp: QRacahParams) -> Matrix:
    """Closed-form tridiagonal matrix with rows summing to theta_0."""
    d, q, h = qp.d, qp.q, qp.h
    ss = qp.s_star
    r1, r2 = qp.r1, qp.r2
    f = qp.field

    def sup(i: int) -> FieldElement:  # entry (i-1, i)
        if i == 1:
            return h * (1 - q ** (-d)) * (1 - r1 * q) * (1 - r2 * q) / (1 - ss * q**2)
        return (h * (1 - q ** (i - d - 1)) * (1 - ss * q**i) * (1 - r1 * q**i) * (1 - r2 * q**i)
                / ((1 - ss * q ** (2 * i - 1)) * (1 - ss * q ** (2 * i))))

    def sub(i: int) -> FieldElement:  # entry (i, i-1)
        if i == d:
            return (h * (1 - q**d) * (r1 - ss * q**d) * (r2 - ss * q**d)
                    / (ss * q**d * (1 - ss * q ** (2 * d))))
        return (h * (1 - q**i) * (1 - ss * q ** (i + d + 1)) * (r1 - ss * q**i) * (r2 - ss * q**i)
                / (ss * q**d * (1 - ss * q ** (2 * i)) * (1 - ss * q ** (2 * i + 1))))

    n = d + 1
    rows = [[f.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i - 1][i] = sup(i)
        rows[i][i - 1] = sub(i)
    for i in range(n):
        rows[i][i] = qp.theta0 - sum((rows[i][j] for j in range(n) if j != i), f.zero)
    return Matrix(f, rows)


def q_racah_p_poly(qp: QRacahParams, i: int, j: int) -> FieldElement:
    """The terminating 4phi3 sum."""
    q, s, ss = qp.q, qp.s, qp.s_star
    d = qp.d
    total = qp.field.zero
    for n in range(d + 1):
        num = (q_pochhammer(q ** (-i), q, n) * q_pochhammer(s * q ** (i + 1), q, n)
               * q_pochhammer(q ** (-j), q, n) * q_pochhammer(ss * q ** (j + 1), q, n) * q**n)
        den = (q_pochhammer(qp.r1 * q, q, n) * q_pochhammer(qp.r2 * q, q, n)
               * q_pochhammer(q ** (-d), q, n) * q_pochhammer(q, q, n))
        total = total + num / den
    return total


def q_racah_k(qp: QRacahParams, j: int) -> FieldElement:
    q, s, ss, r1, r2, d = qp.q, qp.s, qp.s_star, qp.r1, qp.r2, qp.d
    qp_ = lambda a, n: q_pochhammer(a, q, n)  # noqa: E731
    num = (qp_(r1 * q, j) * qp_(r2 * q, j) * qp_(q ** (-d), j) * qp_(ss * q, j)
           * (1 - ss * q ** (2 * j + 1)))
    den = (s**j * q**j * qp_(q, j) * qp_(ss * q / r1, j) * qp_(ss * q / r2, j)
           * qp_(ss * q ** (d + 2), j) * (1 - ss * q))
    return num / den


def q_racah_nu(qp: QRacahParams) -> FieldElement:
    q, s, ss, r1, d = qp.q, qp.s, qp.s_star, qp.r1, qp.d
    qp_ = lambda a, n: q_pochhammer(a, q, n)  # noqa: E731
    return (qp_(s * q**2, d) * qp_(ss * q**2, d)
            / (r1**d * q**d * qp_(s * q / r1, d) * qp_(ss * q / r1, d)))


# random valid arrays, for testing


def _recurrent(rng: random.Random, field: Field, beta: FieldElement, d: int, lo: int, hi: int):
    seq = [field(rng.randint(lo, hi)) for _ in range(min(3, d + 1))]
    if d >= 2:
        gamma = seq[0] - beta * seq[1] + seq[2]
        while len(seq) < d + 1:
            seq.append(gamma + beta * seq[-1] - seq[-2])
    return seq


def random_parameter_array(
    d: int, field: Field, rng: random.Random, *, lo: int = -9, hi: int = 9, max_tries: int = 10000
) -> ParameterArray:
    """Rejection-sample a valid array: draw beta-recurrent eigenvalue sequences and
    phi_1, derive the split sequences, and retry until validation passes."""
    for _ in range(max_tries):
        beta = field(rng.randint(lo, hi))
        if field.is_rational and rng.random() < 0.5:
            beta = beta / field(rng.randint(1, 4))
        theta = _recurrent(rng, field, beta, d, lo, hi)
        theta_s = _recurrent(rng, field, beta, d, lo, hi)
        if d == 0:
            pa = ParameterArray(field, tuple(theta), tuple(theta_s), (), ())
        else:
            if theta[0] == theta[d]:
                continue
            phi1 = field(rng.randint(lo, hi))
            pa = ParameterArray(field, tuple(theta), tuple(theta_s), (field.zero,) * d, (phi1,) + (field.zero,) * (d - 1))
            varphi = tuple(expected_varphi(pa, i) for i in range(1, d + 1))
            pa = ParameterArray(field, tuple(theta), tuple(theta_s), varphi, pa.phi)
            phi = tuple(expected_phi(pa, i) for i in range(1, d + 1))
            pa = ParameterArray(field, tuple(theta), tuple(theta_s), varphi, phi)
        if validate(pa).ok:
            return pa
    raise FamilyError(f"no valid array found in {max_tries} tries")
