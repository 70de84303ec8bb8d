"""Basis labels: orderings of the four symbols 0, d, 0*, d*."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

SYMBOLS = ("0", "d", "0*", "d*")
_RANK = {s: k for k, s in enumerate(SYMBOLS)}
_TOKEN = re.compile(r"[0d]\*?")


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class BasisLabel:
    symbols: tuple[str, str, str, str]

    def __post_init__(self) -> None:
        if sorted(self.symbols, key=lambda s: _RANK.get(s, 99)) != list(SYMBOLS):
            raise LabelError(f"not a permutation of 0, d, 0*, d*: {self.symbols}")

    @classmethod
    def parse(cls, text: str) -> "BasisLabel":
        """Accept compact ``d*00*d`` or comma-separated ``d*,0,0*,d``."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = _TOKEN.findall(text)
            if "".join(parts) != text:
                raise LabelError(f"malformed label {text!r}")
        if len(parts) != 4 or any(p not in _RANK for p in parts):
            raise LabelError(f"malformed label {text!r}")
        return cls(tuple(parts))

    def __str__(self) -> str:
        return "".join(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(_RANK[s] for s in self.symbols)

    def __lt__(self, other: "BasisLabel") -> bool:
        return self.sort_key < other.sort_key

    def swap(self, kind: int) -> "BasisLabel":
        """The kind-adjacent label (kind 1, 2, 3 swaps positions kind-1 and kind)."""
        if kind not in (1, 2, 3):
            raise ValueError(f"adjacency kind must be 1, 2 or 3, not {kind}")
        s = list(self.symbols)
        s[kind - 1], s[kind] = s[kind], s[kind - 1]
        return BasisLabel(tuple(s))

    def neighbors(self) -> list["BasisLabel"]:
        return sorted(self.swap(k) for k in (1, 2, 3))

    @property
    def decomposition(self) -> tuple[str, str]:
        """The pair (y, z) of the last two symbols; the basis lies in the decomposition [yz]."""
        return self.symbols[2], self.symbols[3]


ALL_LABELS: tuple[BasisLabel, ...] = tuple(sorted(BasisLabel(p) for p in permutations(SYMBOLS)))


def adjacency_type(g: BasisLabel, h: BasisLabel) -> int | None:
    for k in (1, 2, 3):
        if g.swap(k) == h:
            return k
    return None


def label(text: str) -> BasisLabel:
    return BasisLabel.parse(text)
