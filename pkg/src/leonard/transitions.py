"""Transition matrices between the 24 labelled bases.

Convention: T(g, h) satisfies ``v^h_j = sum_i T_ij v^g_i``, so
``T(g, h) @ T(h, k) == T(g, k)`` and a walk's weight is the product of
its step matrices in walk order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .bracket import triple_bracket
from .field import Field, FieldElement, Scalar
from .labels import ALL_LABELS, BasisLabel, adjacency_type
from .matrix import Matrix
from .params import ParameterArray
from .system_rep import representation


@dataclass(frozen=True)
class EpsilonConfig:
    """Normalising scalars for the vectors eta_0, eta_d, eta*_0, eta*_d."""

    eps0: FieldElement
    epsd: FieldElement
    eps0s: FieldElement
    epsds: FieldElement

    def __post_init__(self) -> None:
        if not (self.eps0 and self.epsd and self.eps0s and self.epsds):
            raise ValueError("normalising scalars must be nonzero")

    @classmethod
    def ones(cls, field: Field) -> "EpsilonConfig":
        o = field.one
        return cls(o, o, o, o)

    @classmethod
    def of(cls, field: Field, values: Sequence[Scalar]) -> "EpsilonConfig":
        if len(values) != 4:
            raise ValueError("expected four normalising scalars")
        return cls(*(field(v) for v in values))


class _Ctx:
    """Shorthand accessors for the transition formulas."""

    def __init__(self, pa: ParameterArray, eps: EpsilonConfig) -> None:
        self.pa = pa
        self.d = pa.d
        self.f = pa.field
        self.e0, self.ed, self.e0s, self.eds = eps.eps0, eps.epsd, eps.eps0s, eps.epsds
        self.VP = pa.varphi_total
        self.PH = pa.phi_total
        self._beta = pa.beta()

    def vp_first(self, i: int) -> FieldElement:
        return self.pa.varphi_product(range(1, i + 1))

    def vp_last(self, i: int) -> FieldElement:
        return self.pa.varphi_product(range(self.d - i + 1, self.d + 1))

    def ph_first(self, i: int) -> FieldElement:
        return self.pa.phi_product(range(1, i + 1))

    def ph_last(self, i: int) -> FieldElement:
        return self.pa.phi_product(range(self.d - i + 1, self.d + 1))

    def diffs(self, seq: Callable[[int], FieldElement], x: int, ks) -> FieldElement:
        acc = self.f.one
        for k in ks:
            acc = acc * (seq(x) - seq(k))
        return acc

    def tb(self, i: int, j: int) -> FieldElement:
        return triple_bracket(j, i - j, self.d - i, self._beta, field=self.f)

    # the recurring lower-triangular entry shapes

    def forward(self, seq, x: int, i: int, j: int) -> FieldElement:
        """(s_x - s_0)...(s_x - s_{i-j-1}) [j, i-j, d-i]."""
        return self.diffs(seq, x, range(0, i - j)) * self.tb(i, j)

    def backward(self, seq, x: int, i: int, j: int) -> FieldElement:
        """(s_x - s_d)...(s_x - s_{d-i+j+1}) [j, i-j, d-i]."""
        return self.diffs(seq, x, range(self.d - i + j + 1, self.d + 1)) * self.tb(i, j)

    def inv_first(self, seq, i: int, j: int) -> FieldElement:
        """1 / prod_{k in 0..i, k != j} (s_j - s_k)."""
        return 1 / (self.diffs(seq, j, range(0, j)) * self.diffs(seq, j, range(j + 1, i + 1)))

    def inv_last(self, seq, i: int, j: int) -> FieldElement:
        """1 / prod_{k in d-i..d, k != d-j} (s_{d-j} - s_k)."""
        d = self.d
        return 1 / (
            self.diffs(seq, d - j, range(d - j + 1, d + 1)) * self.diffs(seq, d - j, range(d - i, d - j))
        )


# For each label: (diagonal entry of the kind-1 transition, lower entry of the kind-2 transition).
_Diag = Callable[[_Ctx, int], FieldElement]
_Lower = Callable[[_Ctx, int, int], FieldElement]

T_, TS_ = "theta", "theta_star"


def _seq(c: _Ctx, which: str):
    return c.pa.th if which == T_ else c.pa.ths


_TABLE: dict[str, tuple[_Diag, _Lower]] = {
    "d*00*d": (lambda c, i: c.ed * c.VP / (c.e0s * c.vp_first(i)),
               lambda c, i, j: c.inv_first(_seq(c, T_), i, j)),
    "0d*0*d": (lambda c, i: c.vp_first(i) * c.e0s / (c.ed * c.VP),
               lambda c, i, j: c.forward(_seq(c, TS_), c.d, i, j)),
    "d*0d0*": (lambda c, i: c.vp_last(i) * c.ed / c.e0s,
               lambda c, i, j: c.backward(_seq(c, T_), 0, i, j)),
    "0d*d0*": (lambda c, i: c.e0s / (c.vp_last(i) * c.ed),
               lambda c, i, j: c.inv_last(_seq(c, TS_), i, j)),
    "d0*0d*": (lambda c, i: c.eds * c.VP / (c.e0 * c.vp_first(i)),
               lambda c, i, j: c.inv_first(_seq(c, TS_), i, j)),
    "0*d0d*": (lambda c, i: c.vp_first(i) * c.e0 / (c.eds * c.VP),
               lambda c, i, j: c.forward(_seq(c, T_), c.d, i, j)),
    "d0*d*0": (lambda c, i: c.vp_last(i) * c.eds / c.e0,
               lambda c, i, j: c.backward(_seq(c, TS_), 0, i, j)),
    "0*dd*0": (lambda c, i: c.e0 / (c.vp_last(i) * c.eds),
               lambda c, i, j: c.inv_last(_seq(c, T_), i, j)),
    "dd*00*": (lambda c, i: c.e0s * c.PH / (c.ph_last(i) * c.e0),
               lambda c, i, j: c.inv_last(_seq(c, TS_), i, j)),
    "d*d00*": (lambda c, i: c.ph_last(i) * c.e0 / (c.e0s * c.PH),
               lambda c, i, j: c.forward(_seq(c, T_), c.d, i, j)),
    "dd*0*0": (lambda c, i: c.ph_first(i) * c.e0s / c.e0,
               lambda c, i, j: c.forward(_seq(c, TS_), c.d, i, j)),
    "d*d0*0": (lambda c, i: c.e0 / (c.ph_first(i) * c.e0s),
               lambda c, i, j: c.inv_last(_seq(c, T_), i, j)),
    "00*dd*": (lambda c, i: c.eds / (c.ph_first(i) * c.ed),
               lambda c, i, j: c.inv_first(_seq(c, TS_), i, j)),
    "0*0dd*": (lambda c, i: c.ph_first(i) * c.ed / c.eds,
               lambda c, i, j: c.backward(_seq(c, T_), 0, i, j)),
    "00*d*d": (lambda c, i: c.ph_last(i) * c.eds / (c.ed * c.PH),
               lambda c, i, j: c.backward(_seq(c, TS_), 0, i, j)),
    "0*0d*d": (lambda c, i: c.ed * c.PH / (c.ph_last(i) * c.eds),
               lambda c, i, j: c.inv_first(_seq(c, T_), i, j)),
    # bases in which A or A* is diagonal
    "d*0*0d": (lambda c, i: c.ph_last(i) * c.eds * c.VP / (c.vp_first(i) * c.e0s * c.PH),
               lambda c, i, j: c.diffs(c.pa.th, i, range(0, j))),
    "0*d*0d": (lambda c, i: c.vp_first(i) * c.e0s * c.PH / (c.ph_last(i) * c.eds * c.VP),
               lambda c, i, j: c.diffs(c.pa.th, i, range(0, j))),
    "d*0*d0": (lambda c, i: c.vp_last(i) * c.eds / (c.ph_first(i) * c.e0s),
               lambda c, i, j: c.diffs(c.pa.th, c.d - i, range(c.d - j + 1, c.d + 1))),
    "0*d*d0": (lambda c, i: c.ph_first(i) * c.e0s / (c.vp_last(i) * c.eds),
               lambda c, i, j: c.diffs(c.pa.th, c.d - i, range(c.d - j + 1, c.d + 1))),
    "d00*d*": (lambda c, i: c.ph_first(i) * c.ed * c.VP / (c.vp_first(i) * c.e0),
               lambda c, i, j: c.diffs(c.pa.ths, i, range(0, j))),
    "0d0*d*": (lambda c, i: c.vp_first(i) * c.e0 / (c.ph_first(i) * c.ed * c.VP),
               lambda c, i, j: c.diffs(c.pa.ths, i, range(0, j))),
    "d0d*0*": (lambda c, i: c.vp_last(i) * c.ed * c.PH / (c.ph_last(i) * c.e0),
               lambda c, i, j: c.diffs(c.pa.ths, c.d - i, range(c.d - j + 1, c.d + 1))),
    "0dd*0*": (lambda c, i: c.ph_last(i) * c.e0 / (c.vp_last(i) * c.ed * c.PH),
               lambda c, i, j: c.diffs(c.pa.ths, c.d - i, range(c.d - j + 1, c.d + 1))),
}


def reversal(field: Field, n: int) -> Matrix:
    """The anti-diagonal permutation matrix."""
    return Matrix.build(field, n, lambda i, j: 1 if i + j == n - 1 else 0)


def transition_adjacent(
    pa: ParameterArray, g: BasisLabel, h: BasisLabel, eps: EpsilonConfig | None = None
) -> Matrix:
    """Closed-form transition matrix between adjacent labels."""
    kind = adjacency_type(g, h)
    if kind is None:
        raise ValueError(f"{g} and {h} are not adjacent")
    f = pa.field
    n = pa.d + 1
    if kind == 3:
        return reversal(f, n)
    c = _Ctx(pa, eps or EpsilonConfig.ones(f))
    diag, lower = _TABLE[str(g)]
    if kind == 1:
        return Matrix.diagonal(f, [diag(c, i) for i in range(n)])
    return Matrix.build(f, n, lambda i, j: lower(c, i, j) if i >= j else 0)


@dataclass(frozen=True)
class Walk:
    labels: tuple[BasisLabel, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("empty walk")
        for a, b in zip(self.labels, self.labels[1:]):
            if adjacency_type(a, b) is None:
                raise ValueError(f"{a} -> {b} is not a step of the graph")

    @classmethod
    def parse(cls, items: Sequence[str | BasisLabel]) -> "Walk":
        return cls(tuple(x if isinstance(x, BasisLabel) else BasisLabel.parse(x) for x in items))

    @property
    def start(self) -> BasisLabel:
        return self.labels[0]

    @property
    def end(self) -> BasisLabel:
        return self.labels[-1]

    def __len__(self) -> int:
        return len(self.labels) - 1

    def __str__(self) -> str:
        return " -> ".join(map(str, self.labels))


def walk_weight(pa: ParameterArray, walk: Walk, eps: EpsilonConfig | None = None) -> Matrix:
    out = Matrix.identity(pa.field, pa.d + 1)
    for a, b in zip(walk.labels, walk.labels[1:]):
        out = out @ transition_adjacent(pa, a, b, eps)
    return out


def shortest_walk(g: BasisLabel, h: BasisLabel) -> Walk:
    """BFS path, expanding neighbours in label order so the result is deterministic."""
    prev: dict[BasisLabel, BasisLabel | None] = {g: None}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        if cur == h:
            break
        for nb in cur.neighbors():
            if nb not in prev:
                prev[nb] = cur
                queue.append(nb)
    path = [h]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return Walk(tuple(reversed(path)))


def transition_any(
    pa: ParameterArray, g: BasisLabel, h: BasisLabel, eps: EpsilonConfig | None = None
) -> Matrix:
    return walk_weight(pa, shortest_walk(g, h), eps)


def verify_intertwiner(pa: ParameterArray, g: BasisLabel, h: BasisLabel, T: Matrix) -> bool:
    """A^g T == T A^h and A*^g T == T A*^h."""
    rg, rh = representation(pa, g), representation(pa, h)
    return rg.A @ T == T @ rh.A and rg.A_star @ T == T @ rh.A_star


def adjacent_pairs() -> list[tuple[BasisLabel, BasisLabel]]:
    """All 72 ordered pairs of adjacent labels."""
    return [(g, g.swap(k)) for g in ALL_LABELS for k in (1, 2, 3)]


def relation_cycles(g: BasisLabel) -> list[Walk]:
    """Closed walks from the Coxeter relations of the symmetric group on four letters."""
    out = []
    for word in ((1, 1), (2, 2), (3, 3), (1, 3) * 2, (1, 2) * 3, (2, 3) * 3):
        labels = [g]
        for k in word:
            labels.append(labels[-1].swap(k))
        out.append(Walk(tuple(labels)))
    return out
