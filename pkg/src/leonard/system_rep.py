"""Matrix representations of a Leonard system in each of the 24 labelled bases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .field import FieldElement
from .labels import ALL_LABELS, BasisLabel
from .matrix import Matrix
from .params import ParameterArray, local_scalars

Entry = Callable[[ParameterArray, int], object]


@dataclass(frozen=True)
class RepresentationPair:
    label: BasisLabel
    A: Matrix
    A_star: Matrix


def split_matrices(pa: ParameterArray) -> tuple[Matrix, Matrix]:
    """A lower bidiagonal (theta, subdiagonal 1), A* upper bidiagonal (theta_star, superdiagonal varphi)."""
    n = pa.d + 1
    f = pa.field

    def a(i: int, j: int):
        return pa.th(i) if i == j else (1 if i == j + 1 else 0)

    def a_star(i: int, j: int):
        return pa.ths(i) if i == j else (pa.vp(j) if j == i + 1 else 0)

    return Matrix.build(f, n, a), Matrix.build(f, n, a_star)


def _diff_product(seq: Callable[[int], FieldElement], x: int, ks: Iterable[int], one: FieldElement):
    acc = one
    for k in ks:
        acc = acc * (seq(x) - seq(k))
    return acc


def _tridiagonal(pa: ParameterArray, sub: Entry | None, diag: Entry, sup: Entry | None) -> Matrix:
    """sub(i) sits at (i, i-1), sup(i) at (i-1, i), both for 1 <= i <= d."""
    n = pa.d + 1

    def entry(r: int, c: int):
        if r == c:
            return diag(pa, r)
        if sub is not None and r == c + 1:
            return sub(pa, r)
        if sup is not None and c == r + 1:
            return sup(pa, c)
        return 0

    return Matrix.build(pa.field, n, entry)


# Bidiagonal cases: (A sub, A diag, A super, A* sub, A* diag, A* super).
one: Entry = lambda p, i: 1  # noqa: E731
th: Entry = lambda p, i: p.th(i)  # noqa: E731
th_rev: Entry = lambda p, i: p.th(p.d - i)  # noqa: E731
ths: Entry = lambda p, i: p.ths(i)  # noqa: E731
ths_rev: Entry = lambda p, i: p.ths(p.d - i)  # noqa: E731
vp: Entry = lambda p, i: p.vp(i)  # noqa: E731
vp_rev: Entry = lambda p, i: p.vp(p.d - i + 1)  # noqa: E731
ph: Entry = lambda p, i: p.ph(i)  # noqa: E731
ph_rev: Entry = lambda p, i: p.ph(p.d - i + 1)  # noqa: E731

_BIDIAGONAL: dict[str, tuple] = {
    "d*00*d": (one, th, None, None, ths, vp),
    "0d*0*d": (vp, th, None, None, ths, one),
    "d*0d0*": (None, th_rev, one, vp_rev, ths_rev, None),
    "0d*d0*": (None, th_rev, vp_rev, one, ths_rev, None),
    "d0*0d*": (None, th, vp, one, ths, None),
    "0*d0d*": (None, th, one, vp, ths, None),
    "d0*d*0": (vp_rev, th_rev, None, None, ths_rev, one),
    "0*dd*0": (one, th_rev, None, None, ths_rev, vp_rev),
    "dd*00*": (None, th, ph_rev, one, ths_rev, None),
    "d*d00*": (None, th, one, ph_rev, ths_rev, None),
    "dd*0*0": (ph, th_rev, None, None, ths, one),
    "d*d0*0": (one, th_rev, None, None, ths, ph),
    "00*dd*": (None, th_rev, ph, one, ths, None),
    "0*0dd*": (None, th_rev, one, ph, ths, None),
    "00*d*d": (ph_rev, th, None, None, ths_rev, one),
    "0*0d*d": (one, th, None, None, ths_rev, ph_rev),
}


def _lower_quotient(seq, pa: ParameterArray, i: int) -> FieldElement:
    """prod_{k=i+1..d}(s_i - s_k) / prod_{k=i..d}(s_{i-1} - s_k)."""
    one_ = pa.field.one
    d = pa.d
    return _diff_product(seq, i, range(i + 1, d + 1), one_) / _diff_product(seq, i - 1, range(i, d + 1), one_)


def _upper_quotient(seq, pa: ParameterArray, i: int) -> FieldElement:
    """prod_{k=0..i-2}(s_{i-1} - s_k) / prod_{k=0..i-1}(s_i - s_k)."""
    one_ = pa.field.one
    return _diff_product(seq, i - 1, range(0, i - 1), one_) / _diff_product(seq, i, range(0, i), one_)


def _diagonal_cases(pa: ParameterArray, name: str) -> tuple[Matrix, Matrix]:
    """Cases where one matrix is diagonal and the other irreducible tridiagonal."""
    d = pa.d
    n = d + 1
    f = pa.field
    scal = local_scalars(pa)
    T, TS = pa.th, pa.ths
    low, up = _lower_quotient, _upper_quotient
    # The d-i variants reuse the quotients at index m = d-i+1.
    rev = lambda i: d - i + 1  # noqa: E731

    if name == "d*0*0d":
        diag = Matrix.diagonal(f, pa.theta)
        tri = _tridiagonal(pa, lambda p, i: p.ph(d - i + 1) * low(T, p, i),
                           lambda p, i: scal.a_star[i],
                           lambda p, i: p.vp(i) * up(T, p, i))
        return diag, tri
    if name == "0*d*0d":
        diag = Matrix.diagonal(f, pa.theta)
        tri = _tridiagonal(pa, lambda p, i: p.vp(i) * low(T, p, i),
                           lambda p, i: scal.a_star[i],
                           lambda p, i: p.ph(d - i + 1) * up(T, p, i))
        return diag, tri
    if name == "d*0*d0":
        diag = Matrix.diagonal(f, [pa.th(d - i) for i in range(n)])
        tri = _tridiagonal(pa, lambda p, i: p.vp(d - i + 1) * up(T, p, rev(i)),
                           lambda p, i: scal.a_star[d - i],
                           lambda p, i: p.ph(i) * low(T, p, rev(i)))
        return diag, tri
    if name == "0*d*d0":
        diag = Matrix.diagonal(f, [pa.th(d - i) for i in range(n)])
        tri = _tridiagonal(pa, lambda p, i: p.ph(i) * up(T, p, rev(i)),
                           lambda p, i: scal.a_star[d - i],
                           lambda p, i: p.vp(d - i + 1) * low(T, p, rev(i)))
        return diag, tri
    if name == "d00*d*":
        tri = _tridiagonal(pa, lambda p, i: p.ph(i) * low(TS, p, i),
                           lambda p, i: scal.a[i],
                           lambda p, i: p.vp(i) * up(TS, p, i))
        return tri, Matrix.diagonal(f, pa.theta_star)
    if name == "0d0*d*":
        tri = _tridiagonal(pa, lambda p, i: p.vp(i) * low(TS, p, i),
                           lambda p, i: scal.a[i],
                           lambda p, i: p.ph(i) * up(TS, p, i))
        return tri, Matrix.diagonal(f, pa.theta_star)
    if name == "d0d*0*":
        tri = _tridiagonal(pa, lambda p, i: p.vp(d - i + 1) * up(TS, p, rev(i)),
                           lambda p, i: scal.a[d - i],
                           lambda p, i: p.ph(d - i + 1) * low(TS, p, rev(i)))
        return tri, Matrix.diagonal(f, [pa.ths(d - i) for i in range(n)])
    if name == "0dd*0*":
        tri = _tridiagonal(pa, lambda p, i: p.ph(d - i + 1) * up(TS, p, rev(i)),
                           lambda p, i: scal.a[d - i],
                           lambda p, i: p.vp(d - i + 1) * low(TS, p, rev(i)))
        return tri, Matrix.diagonal(f, [pa.ths(d - i) for i in range(n)])
    raise AssertionError(name)


def representation(pa: ParameterArray, g: BasisLabel | str) -> RepresentationPair:
    """Closed-form matrices representing A and A* in the basis labelled g."""
    if isinstance(g, str):
        g = BasisLabel.parse(g)
    name = str(g)
    if name in _BIDIAGONAL:
        a_sub, a_diag, a_sup, s_sub, s_diag, s_sup = _BIDIAGONAL[name]
        A = _tridiagonal(pa, a_sub, a_diag, a_sup)
        AS = _tridiagonal(pa, s_sub, s_diag, s_sup)
    else:
        A, AS = _diagonal_cases(pa, name)
    return RepresentationPair(g, A, AS)


def all_representations(pa: ParameterArray) -> dict[BasisLabel, RepresentationPair]:
    return {g: representation(pa, g) for g in ALL_LABELS}


def expected_shape(g: BasisLabel) -> tuple[str, str]:
    """Shapes of (A, A*) predicted from which of the last two symbols are starred."""
    y, z = g.decomposition
    ys, zs = y.endswith("*"), z.endswith("*")
    if ys and zs:
        return "irreducible tridiagonal", "diagonal"
    if not ys and not zs:
        return "diagonal", "irreducible tridiagonal"
    if ys:
        return "lower bidiagonal", "upper bidiagonal"
    return "upper bidiagonal", "lower bidiagonal"


def classify_shape(m: Matrix) -> str:
    if m.is_diagonal():
        return "diagonal"
    if m.is_lower_bidiagonal():
        return "lower bidiagonal"
    if m.is_upper_bidiagonal():
        return "upper bidiagonal"
    if m.is_irreducible_tridiagonal():
        return "irreducible tridiagonal"
    return "other"


def shape_census(pa: ParameterArray) -> dict[tuple[str, str], int]:
    counts: dict[tuple[str, str], int] = {}
    for g in ALL_LABELS:
        rep = representation(pa, g)
        key = (classify_shape(rep.A), classify_shape(rep.A_star))
        counts[key] = counts.get(key, 0) + 1
    return counts


def poly_product(m: Matrix, roots: Iterable[FieldElement]) -> Matrix:
    """prod (m - r I) over the given roots."""
    out = Matrix.identity(m.field, m.size)
    for r in roots:
        out = out @ m.shift(r)
    return out


def primitive_idempotent(m: Matrix, eigenvalues: list[FieldElement], i: int) -> Matrix:
    """E_i = prod_{k != i} (m - e_k) / (e_i - e_k)."""
    others = [e for k, e in enumerate(eigenvalues) if k != i]
    den = m.field.one
    for e in others:
        den = den * (eigenvalues[i] - e)
    return poly_product(m, others).scale(den.inverse())


def primitive_idempotents(m: Matrix, eigenvalues: list[FieldElement]) -> list[Matrix]:
    return [primitive_idempotent(m, eigenvalues, i) for i in range(len(eigenvalues))]


@dataclass(frozen=True)
class TildeOperators:
    E0: Matrix
    Ed: Matrix
    E0s: Matrix
    Eds: Matrix


def tilde_from_matrices(A: Matrix, A_star: Matrix, pa: ParameterArray) -> TildeOperators:
    """Unnormalised end idempotents, e.g. E~_0 = prod_{k=1..d}(A - theta_k)."""
    d = pa.d
    return TildeOperators(
        E0=poly_product(A, pa.theta[1:]),
        Ed=poly_product(A, pa.theta[:d]),
        E0s=poly_product(A_star, pa.theta_star[1:]),
        Eds=poly_product(A_star, pa.theta_star[:d]),
    )


def tilde_operators(pa: ParameterArray, g: BasisLabel | str = "d*00*d") -> TildeOperators:
    rep = representation(pa, g)
    return tilde_from_matrices(rep.A, rep.A_star, pa)


def tilde_identities(pa: ParameterArray, g: BasisLabel | str = "d*00*d") -> dict[str, bool]:
    """Traces, back-and-forth relations and triple products of the tilde operators."""
    t = tilde_operators(pa, g)
    VP, PH = pa.varphi_total, pa.phi_total
    E0, Ed, E0s, Eds = t.E0, t.Ed, t.E0s, t.Eds
    return {
        "trace Ed E*0": (Ed @ E0s).trace() == VP,
        "trace E0 E*d": (E0 @ Eds).trace() == VP,
        "trace E0 E*0": (E0 @ E0s).trace() == PH,
        "trace Ed E*d": (Ed @ Eds).trace() == PH,
        "E*0 Ed E*0": E0s @ Ed @ E0s == E0s.scale(VP),
        "Ed E*0 Ed": Ed @ E0s @ Ed == Ed.scale(VP),
        "E0 E*d E0": E0 @ Eds @ E0 == E0.scale(VP),
        "E*d E0 E*d": Eds @ E0 @ Eds == Eds.scale(VP),
        "E0 E*0 E0": E0 @ E0s @ E0 == E0.scale(PH),
        "E*0 E0 E*0": E0s @ E0 @ E0s == E0s.scale(PH),
        "Ed E*d Ed": Ed @ Eds @ Ed == Ed.scale(PH),
        "E*d Ed E*d": Eds @ Ed @ Eds == Eds.scale(PH),
        "E*d E0 E*0": Eds @ E0 @ E0s == Eds @ Ed @ E0s,
        "Ed E*0 E0": Ed @ E0s @ E0 == Ed @ Eds @ E0,
        "E0 E*0 Ed": E0 @ E0s @ Ed == E0 @ Eds @ Ed,
        "E*0 E0 E*d": E0s @ E0 @ Eds == E0s @ Ed @ Eds,
    }


def _poly_mul(a: list, b: list, zero) -> list:
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def tridiagonal_charpoly(m: Matrix) -> list[FieldElement]:
    """Coefficients (constant term first) of det(tI - m) for tridiagonal m, via the continuant recurrence."""
    if not m.is_tridiagonal():
        raise ValueError("matrix is not tridiagonal")
    f = m.field
    zero, one = f.zero, f.one
    prev, cur = [one], [-m[0, 0], one]
    for k in range(1, m.size):
        nxt = _poly_mul(cur, [-m[k, k], one], zero)
        c = m[k, k - 1] * m[k - 1, k]
        for i, x in enumerate(prev):
            nxt[i] = nxt[i] - c * x
        prev, cur = cur, nxt
    return cur


def roots_polynomial(roots: Iterable[FieldElement], field) -> list[FieldElement]:
    out = [field.one]
    for r in roots:
        out = _poly_mul(out, [-r, field.one], field.zero)
    return out


def charpoly_matches(m: Matrix, roots: list[FieldElement]) -> bool:
    """det(tI - m) == prod(t - r) as polynomials (m tridiagonal)."""
    return tridiagonal_charpoly(m) == roots_polynomial(roots, m.field)


def _tridiagonal_in_idempotents(X: Matrix, Es: list[Matrix]) -> bool:
    """E_i X E_j is zero iff |i - j| > 1 (nonzero when |i - j| == 1)."""
    d = len(Es) - 1
    for i in range(d + 1):
        for j in range(d + 1):
            z = (Es[i] @ X @ Es[j]).is_zero()
            if abs(i - j) > 1 and not z:
                return False
            if abs(i - j) == 1 and z:
                return False
    return True


def verify_leonard_conditions(pa: ParameterArray) -> bool:
    """Check the Leonard system axioms on the closed-form representations."""
    rep = representation(pa, "d*0*0d")
    Es = primitive_idempotents(rep.A, list(pa.theta))
    if not _tridiagonal_in_idempotents(rep.A_star, Es):
        return False
    dual = representation(pa, "d00*d*")
    Ess = primitive_idempotents(dual.A_star, list(pa.theta_star))
    if not _tridiagonal_in_idempotents(dual.A, Ess):
        return False
    # multiplicity-free: the idempotents are nonzero and sum to I
    n = pa.d + 1
    ident = Matrix.identity(pa.field, n)
    for mats in (Es, Ess):
        if any(E.is_zero() for E in mats):
            return False
        total = Matrix.zeros(pa.field, n)
        for E in mats:
            total = total + E
        if total != ident:
            return False
    return True
