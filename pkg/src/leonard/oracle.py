"""Brute-force reference: build a concrete module and compute everything by linear algebra.

Nothing here uses the closed-form representation or transition tables;
bases are produced from their defining vectors, and representations and
transitions come from direct changes of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .field import FieldElement
from .labels import ALL_LABELS, BasisLabel
from .matrix import Matrix, Vector, in_span, intersect, same_span, span_rank, vector_scale
from .params import ParameterArray
from .system_rep import poly_product, primitive_idempotents, split_matrices, tilde_from_matrices
from .transitions import EpsilonConfig


class OracleError(AssertionError):
    """A defining relation failed on the concrete module."""


@dataclass
class ConcreteModule:
    pa: ParameterArray
    eps: EpsilonConfig
    A: Matrix
    A_star: Matrix
    E: list[Matrix]
    E_star: list[Matrix]
    eta0: Vector
    etad: Vector
    eta0s: Vector
    etads: Vector


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise OracleError(what)


def build_module(pa: ParameterArray, eps: EpsilonConfig | None = None) -> ConcreteModule:
    """Realise the system on column vectors via the split form and fix the four end vectors.

    eta*_0 is the first standard vector; the other three are forced by the
    normalisation relations, and every remaining relation is then checked.
    """
    f = pa.field
    eps = eps or EpsilonConfig.ones(f)
    n = pa.d + 1
    A, AS = split_matrices(pa)
    E = primitive_idempotents(A, list(pa.theta))
    ES = primitive_idempotents(AS, list(pa.theta_star))
    t = tilde_from_matrices(A, AS, pa)
    VP, PH = pa.varphi_total, pa.phi_total
    e0, ed, e0s, eds = eps.eps0, eps.epsd, eps.eps0s, eps.epsds

    eta0s = tuple(f.one if k == 0 else f.zero for k in range(n))
    etad = vector_scale(ed / e0s, t.Ed.apply(eta0s))
    eta0 = vector_scale(e0 / (e0s * PH), t.E0.apply(eta0s))
    etads = vector_scale(eds / e0, t.Eds.apply(eta0))

    def eq(lhs: Vector, rhs: Vector, what: str) -> None:
        _check(lhs == rhs, what)

    sc = vector_scale
    eq(sc(1 / e0s, t.Ed.apply(eta0s)), sc(1 / ed, etad), "E~_d eta*_0")
    eq(sc(1 / eds, t.Ed.apply(etads)), sc(1 / ed, etad), "E~_d eta*_d")
    eq(sc(1 / e0, t.E0s.apply(eta0)), sc(1 / e0s, eta0s), "E~*_0 eta_0")
    eq(sc(1 / ed, t.E0s.apply(etad)), sc(VP / e0s, eta0s), "E~*_0 eta_d")
    eq(sc(1 / e0, t.Eds.apply(eta0)), sc(1 / eds, etads), "E~*_d eta_0")
    eq(sc(1 / ed, t.Eds.apply(etad)), sc(PH / eds, etads), "E~*_d eta_d")
    eq(sc(1 / e0s, t.E0.apply(eta0s)), sc(PH / e0, eta0), "E~_0 eta*_0")
    eq(sc(1 / eds, t.E0.apply(etads)), sc(VP / e0, eta0), "E~_0 eta*_d")

    d = pa.d
    eq(sc(1 / eds, E[d].apply(etads)), sc(1 / e0s, E[d].apply(eta0s)), "E_d eta*_d")
    eq(sc(1 / ed, ES[0].apply(etad)), sc(VP / e0, ES[0].apply(eta0)), "E*_0 eta_d")
    eq(sc(1 / ed, ES[d].apply(etad)), sc(PH / e0, ES[d].apply(eta0)), "E*_d eta_d")
    eq(sc(1 / eds, E[0].apply(etads)), sc(VP / (PH * e0s), E[0].apply(eta0s)), "E_0 eta*_d")

    # the four vectors lie in their eigenspaces and are nonzero
    for vec, mat, ev, what in ((eta0, A, pa.th(0), "eta_0"), (etad, A, pa.th(d), "eta_d"),
                               (eta0s, AS, pa.ths(0), "eta*_0"), (etads, AS, pa.ths(d), "eta*_d")):
        _check(any(vec), f"{what} vanishes")
        _check(mat.apply(vec) == vector_scale(ev, vec), f"{what} is not an eigenvector")

    return ConcreteModule(pa, eps, A, AS, E, ES, eta0, etad, eta0s, etads)


def _poly_vector(m: Matrix, shifts: Sequence[FieldElement], v: Vector) -> Vector:
    return poly_product(m, shifts).apply(v)


def _basis_rules(M: ConcreteModule) -> dict[str, Callable[[int], Vector]]:
    pa = M.pa
    d = pa.d
    A, AS = M.A, M.A_star
    T = lambda ks: [pa.th(k) for k in ks]  # noqa: E731
    TS = lambda ks: [pa.ths(k) for k in ks]  # noqa: E731
    up = lambda i: range(0, i)  # noqa: E731  0..i-1
    down = lambda i: range(i + 1, d + 1)  # noqa: E731  i+1..d
    upr = lambda i: range(0, d - i)  # noqa: E731  0..d-i-1
    downr = lambda i: range(d - i + 1, d + 1)  # noqa: E731  d-i+1..d
    pv = _poly_vector
    return {
        "d*00*d": lambda i: pv(A, T(up(i)), M.eta0s),
        "0d*0*d": lambda i: pv(AS, TS(down(i)), M.etad),
        "d*0d0*": lambda i: pv(A, T(upr(i)), M.eta0s),
        "0d*d0*": lambda i: pv(AS, TS(downr(i)), M.etad),
        "d0*0d*": lambda i: pv(AS, TS(up(i)), M.eta0),
        "0*d0d*": lambda i: pv(A, T(down(i)), M.etads),
        "d0*d*0": lambda i: pv(AS, TS(upr(i)), M.eta0),
        "0*dd*0": lambda i: pv(A, T(downr(i)), M.etads),
        "dd*00*": lambda i: pv(AS, TS(downr(i)), M.eta0),
        "d*d00*": lambda i: pv(A, T(down(i)), M.eta0s),
        "dd*0*0": lambda i: pv(AS, TS(down(i)), M.eta0),
        "d*d0*0": lambda i: pv(A, T(downr(i)), M.eta0s),
        "00*dd*": lambda i: pv(AS, TS(up(i)), M.etad),
        "0*0dd*": lambda i: pv(A, T(upr(i)), M.etads),
        "00*d*d": lambda i: pv(AS, TS(upr(i)), M.etad),
        "0*0d*d": lambda i: pv(A, T(up(i)), M.etads),
        "d*0*0d": lambda i: M.E[i].apply(M.eta0s),
        "0*d*0d": lambda i: M.E[i].apply(M.etads),
        "d*0*d0": lambda i: M.E[d - i].apply(M.eta0s),
        "0*d*d0": lambda i: M.E[d - i].apply(M.etads),
        "d00*d*": lambda i: M.E_star[i].apply(M.eta0),
        "0d0*d*": lambda i: M.E_star[i].apply(M.etad),
        "d0d*0*": lambda i: M.E_star[d - i].apply(M.eta0),
        "0dd*0*": lambda i: M.E_star[d - i].apply(M.etad),
    }


@dataclass(frozen=True)
class ConcreteBasis:
    label: BasisLabel
    vectors: tuple[Vector, ...]

    def matrix(self, field) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_columns(field, self.vectors)


def build_basis_direct(M: ConcreteModule, g: BasisLabel | str) -> ConcreteBasis:
    if isinstance(g, str):
        g = BasisLabel.parse(g)
    rule = _basis_rules(M)[str(g)]
    vecs = tuple(rule(i) for i in range(M.pa.d + 1))
    _check(span_rank(M.pa.field, vecs) == M.pa.d + 1, f"{g} vectors are not a basis")
    return ConcreteBasis(g, vecs)


def all_bases(M: ConcreteModule) -> dict[BasisLabel, ConcreteBasis]:
    return {g: build_basis_direct(M, g) for g in ALL_LABELS}


def transition_direct(M: ConcreteModule, bg: ConcreteBasis, bh: ConcreteBasis) -> Matrix:
    f = M.pa.field
    return bg.matrix(f).solve(bh.matrix(f))


def representation_direct(M: ConcreteModule, b: ConcreteBasis) -> tuple[Matrix, Matrix]:
    f = M.pa.field
    P = b.matrix(f)
    inv = P.inverse()
    return inv @ M.A @ P, inv @ M.A_star @ P


# flags and decompositions


def _image_vectors(ms: Sequence[Matrix]) -> list[Vector]:
    out: list[Vector] = []
    for m in ms:
        out.extend(m.columns())
    return out


def flag(M: ConcreteModule, symbol: str, i: int) -> list[Vector]:
    """Component i of the flag named by symbol, as a spanning list."""
    d = M.pa.d
    if i < 0:
        return []
    idem = M.E_star if symbol.endswith("*") else M.E
    idx = range(0, i + 1) if symbol.startswith("0") else range(d - i, d + 1)
    return _image_vectors([idem[k] for k in idx])


def decomposition_component(M: ConcreteModule, y: str, z: str, i: int) -> list[Vector]:
    """Component i of the decomposition [yz]: flag y at i intersected with flag z at d-i."""
    return intersect(M.pa.field, flag(M, y, i), flag(M, z, M.pa.d - i))


def verify_opposite_flags(M: ConcreteModule) -> bool:
    f = M.pa.field
    d = M.pa.d
    symbols = ("0", "d", "0*", "d*")
    for a in symbols:
        for b in symbols:
            if a == b:
                continue
            for i in range(d + 1):
                for j in range(d + 1):
                    if i + j < d and span_rank(f, flag(M, a, i) + flag(M, b, j)) != i + j + 2:
                        return False
    return True


def verify_subspace_memberships(M: ConcreteModule, b: ConcreteBasis) -> bool:
    """Each v_i lies in component i of [yz]; partial sums recover the flags."""
    f = M.pa.field
    d = M.pa.d
    y, z = b.label.decomposition
    for i, v in enumerate(b.vectors):
        comp = decomposition_component(M, y, z, i)
        if len(comp) != 1 or not in_span(f, comp, v):
            return False
        if not same_span(f, list(b.vectors[: i + 1]), flag(M, y, i)):
            return False
        if not same_span(f, list(b.vectors[i:]), flag(M, z, d - i)):
            return False
    return True


def verify_generation(M: ConcreteModule) -> bool:
    """The (d+1)^2 matrices A^r E*_0 A^s are linearly independent."""
    f = M.pa.field
    n = M.pa.d + 1
    powers = [Matrix.identity(f, n)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ M.A)
    flat = []
    for r in powers:
        left = r @ M.E_star[0]
        for s in powers:
            flat.append(tuple(x for row in (left @ s).rows for x in row))
    return span_rank(f, flat) == n * n


def verify_split_decomposition(M: ConcreteModule) -> bool:
    """U_i = (E*_0V+...+E*_iV) ∩ (E_iV+...+E_dV) is one-dimensional, A - theta_i
    raises, A* - theta*_i lowers, and (A - theta_{i-1})(A* - theta*_i) acts on U_i as varphi_i."""
    pa = M.pa
    f = pa.field
    d = pa.d
    U = []
    for i in range(d + 1):
        comp = intersect(f, flag(M, "0*", i), flag(M, "d", d - i))
        if len(comp) != 1:
            return False
        U.append(comp[0])
    for i, u in enumerate(U):
        raised = M.A.shift(pa.th(i)).apply(u)
        lowered = M.A_star.shift(pa.ths(i)).apply(u)
        if i < d and not (in_span(f, [U[i + 1]], raised) and any(raised)):
            return False
        if i == d and any(raised):
            return False
        if i > 0 and not (in_span(f, [U[i - 1]], lowered) and any(lowered)):
            return False
        if i == 0 and any(lowered):
            return False
        if i > 0:
            w = M.A.shift(pa.th(i - 1)).apply(lowered)
            if w != vector_scale(pa.vp(i), u):
                return False
    return True
