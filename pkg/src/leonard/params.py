"""Parameter arrays: validation, the eight relatives, local scalars, file format."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .bracket import beta_from_sequence
from .field import Field, FieldElement, FieldParseError, Scalar


class ParameterFileError(ValueError):
    pass


@dataclass(frozen=True)
class ParameterArray:
    """Eigenvalue sequences ``theta``, ``theta_star`` (length d+1) and the
    first and second split sequences ``varphi``, ``phi`` (length d, 1-indexed
    in the accessors below)."""

    field: Field
    theta: tuple[FieldElement, ...]
    theta_star: tuple[FieldElement, ...]
    varphi: tuple[FieldElement, ...]
    phi: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if len(self.theta) < 1:
            raise ValueError("theta must have at least one entry")
        d = len(self.theta) - 1
        if len(self.theta_star) != d + 1 or len(self.varphi) != d or len(self.phi) != d:
            raise ValueError(
                f"inconsistent lengths: theta {len(self.theta)}, theta_star {len(self.theta_star)}, "
                f"varphi {len(self.varphi)}, phi {len(self.phi)}"
            )

    @classmethod
    def from_values(
        cls,
        field: Field,
        theta: Iterable[Scalar],
        theta_star: Iterable[Scalar],
        varphi: Iterable[Scalar],
        phi: Iterable[Scalar],
    ) -> "ParameterArray":
        conv = lambda xs: tuple(field(x) for x in xs)  # noqa: E731
        return cls(field, conv(theta), conv(theta_star), conv(varphi), conv(phi))

    @property
    def d(self) -> int:
        return len(self.theta) - 1

    # index helpers; split sequences vanish at 0 and d+1

    def th(self, i: int) -> FieldElement:
        return self.theta[i]

    def ths(self, i: int) -> FieldElement:
        return self.theta_star[i]

    def vp(self, i: int) -> FieldElement:
        return self.varphi[i - 1] if 1 <= i <= self.d else self.field.zero

    def ph(self, i: int) -> FieldElement:
        return self.phi[i - 1] if 1 <= i <= self.d else self.field.zero

    def varphi_product(self, indices: Iterable[int]) -> FieldElement:
        acc = self.field.one
        for i in indices:
            acc = acc * self.vp(i)
        return acc

    def phi_product(self, indices: Iterable[int]) -> FieldElement:
        acc = self.field.one
        for i in indices:
            acc = acc * self.ph(i)
        return acc

    @property
    def varphi_total(self) -> FieldElement:
        return self.varphi_product(range(1, self.d + 1))

    @property
    def phi_total(self) -> FieldElement:
        return self.phi_product(range(1, self.d + 1))

    def beta(self) -> FieldElement | None:
        """beta from theta (None when d <= 2, where no bracket needs it)."""
        return beta_from_sequence(self.theta)


@dataclass(frozen=True)
class Violation:
    condition: str  # "i" .. "v"
    index: int | None
    detail: str

    def __str__(self) -> str:
        where = "" if self.index is None else f" at index {self.index}"
        return f"condition ({self.condition}){where}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition: str, index: int | None, detail: str) -> None:
        self.violations.append(Violation(condition, index, detail))

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}


def _ratio_sum(pa: ParameterArray, i: int) -> FieldElement:
    """sum_{h<i} (theta_h - theta_{d-h}) / (theta_0 - theta_d)."""
    d = pa.d
    den = pa.th(0) - pa.th(d)
    acc = pa.field.zero
    for h in range(i):
        acc = acc + (pa.th(h) - pa.th(d - h))
    return acc / den


def expected_varphi(pa: ParameterArray, i: int) -> FieldElement:
    d = pa.d
    return pa.ph(1) * _ratio_sum(pa, i) + (pa.ths(i) - pa.ths(0)) * (pa.th(i - 1) - pa.th(d))


def expected_phi(pa: ParameterArray, i: int) -> FieldElement:
    d = pa.d
    return pa.vp(1) * _ratio_sum(pa, i) + (pa.ths(i) - pa.ths(0)) * (pa.th(d - i + 1) - pa.th(0))


def _beta_ratios(seq: Sequence[FieldElement]) -> list[FieldElement | None]:
    d = len(seq) - 1
    out = []
    for i in range(2, d):
        den = seq[i - 1] - seq[i]
        out.append((seq[i - 2] - seq[i + 1]) / den if den else None)
    return out


def validate(pa: ParameterArray) -> ValidationReport:
    """Check the five conditions characterising parameter arrays of Leonard systems."""
    rep = ValidationReport()
    d = pa.d
    for i in range(1, d + 1):
        if not pa.vp(i):
            rep.add("i", i, "varphi vanishes")
        if not pa.ph(i):
            rep.add("i", i, "phi vanishes")
    for name, seq in (("theta", pa.theta), ("theta_star", pa.theta_star)):
        seen: dict[FieldElement, int] = {}
        for i, x in enumerate(seq):
            if x in seen:
                rep.add("ii", i, f"{name}[{seen[x]}] == {name}[{i}] == {x}")
            else:
                seen[x] = i
    if d >= 1 and pa.th(0) != pa.th(d):
        for i in range(1, d + 1):
            want = expected_varphi(pa, i)
            if pa.vp(i) != want:
                rep.add("iii", i, f"varphi is {pa.vp(i)}, expected {want}")
            want = expected_phi(pa, i)
            if pa.ph(i) != want:
                rep.add("iv", i, f"phi is {pa.ph(i)}, expected {want}")
    if d >= 3:
        r1, r2 = _beta_ratios(pa.theta), _beta_ratios(pa.theta_star)
        values = set(r1 + r2)
        if None in values:
            rep.add("v", None, "ratio undefined (repeated consecutive eigenvalues)")
        elif len(values) != 1:
            rep.add("v", None, "ratios are not equal and constant: " + ", ".join(map(str, r1 + r2)))
    return rep


def is_valid(pa: ParameterArray) -> bool:
    return validate(pa).ok


# the dihedral group of order 8 generated by *, down and Down


@dataclass(frozen=True, order=True)
class D4Element:
    """The word ``down^a Down^b star^c`` applied left to right (normal form)."""

    down: bool = False
    Down: bool = False
    star: bool = False

    @staticmethod
    def _act(state: tuple[bool, bool, bool], gen: str) -> tuple[bool, bool, bool]:
        # state: (roles swapped, first sequence reversed, second sequence reversed)
        swapped, r1, r2 = state
        if gen == "*":
            return (not swapped, r2, r1)
        if gen == "down":
            return (swapped, r1, not r2)
        if gen == "Down":
            return (swapped, not r1, r2)
        raise ValueError(f"unknown generator {gen!r}")

    @property
    def word(self) -> tuple[str, ...]:
        return tuple(
            g for g, flag in (("down", self.down), ("Down", self.Down), ("*", self.star)) if flag
        )

    def _state(self) -> tuple[bool, bool, bool]:
        s = (False, False, False)
        for g in self.word:
            s = self._act(s, g)
        return s

    @classmethod
    def _from_state(cls, state: tuple[bool, bool, bool]) -> "D4Element":
        for g in ALL_D4:
            if g._state() == state:
                return g
        raise AssertionError("unreachable")

    @classmethod
    def from_word(cls, word: Iterable[str]) -> "D4Element":
        s = (False, False, False)
        for g in word:
            s = cls._act(s, g)
        return cls._from_state(s)

    def then(self, other: "D4Element") -> "D4Element":
        """Apply self, then other."""
        return D4Element.from_word(self.word + other.word)

    def inverse(self) -> "D4Element":
        return D4Element.from_word(reversed(self.word))

    def __str__(self) -> str:
        sym = {"down": "↓", "Down": "⇓", "*": "*"}
        return "".join(sym[g] for g in self.word) or "1"


ALL_D4: tuple[D4Element, ...] = tuple(
    D4Element(a, b, c) for a in (False, True) for b in (False, True) for c in (False, True)
)
STAR = D4Element(star=True)
DOWN = D4Element(down=True)
DOWN2 = D4Element(Down=True)
IDENTITY = D4Element()


def _apply_generator(pa: ParameterArray, gen: str) -> ParameterArray:
    rev = lambda xs: tuple(reversed(xs))  # noqa: E731
    if gen == "*":
        return ParameterArray(pa.field, pa.theta_star, pa.theta, pa.varphi, rev(pa.phi))
    if gen == "down":
        return ParameterArray(pa.field, pa.theta, rev(pa.theta_star), rev(pa.phi), rev(pa.varphi))
    if gen == "Down":
        return ParameterArray(pa.field, rev(pa.theta), pa.theta_star, pa.phi, pa.varphi)
    raise ValueError(f"unknown generator {gen!r}")


def relative(pa: ParameterArray, g: D4Element | Iterable[str]) -> ParameterArray:
    """Parameter array of the relative obtained by applying g's word left to right."""
    word = g.word if isinstance(g, D4Element) else tuple(g)
    for gen in word:
        pa = _apply_generator(pa, gen)
    return pa


@dataclass(frozen=True)
class LocalScalars:
    a: tuple[FieldElement, ...]
    a_star: tuple[FieldElement, ...]


def _local(
    base: FieldElement,
    first: FieldElement,
    second: FieldElement,
    lower_gap: FieldElement | None,
    upper_gap: FieldElement | None,
) -> FieldElement:
    acc = base
    if lower_gap is not None:
        acc = acc + first / lower_gap
    if upper_gap is not None:
        acc = acc + second / upper_gap
    return acc


def local_scalars_both(pa: ParameterArray) -> tuple[LocalScalars, LocalScalars]:
    """Local scalars computed from varphi and, independently, from phi."""
    d = pa.d
    a1, a2, s1, s2 = [], [], [], []
    for i in range(d + 1):
        gs_lo = pa.ths(i) - pa.ths(i - 1) if i > 0 else None
        gs_hi = pa.ths(i) - pa.ths(i + 1) if i < d else None
        g_lo = pa.th(i) - pa.th(i - 1) if i > 0 else None
        g_hi = pa.th(i) - pa.th(i + 1) if i < d else None
        a1.append(_local(pa.th(i), pa.vp(i), pa.vp(i + 1), gs_lo, gs_hi))
        a2.append(_local(pa.th(d - i), pa.ph(i), pa.ph(i + 1), gs_lo, gs_hi))
        s1.append(_local(pa.ths(i), pa.vp(i), pa.vp(i + 1), g_lo, g_hi))
        s2.append(_local(pa.ths(d - i), pa.ph(d - i + 1), pa.ph(d - i), g_lo, g_hi))
    return LocalScalars(tuple(a1), tuple(s1)), LocalScalars(tuple(a2), tuple(s2))


def local_scalars(pa: ParameterArray) -> LocalScalars:
    first, second = local_scalars_both(pa)
    if first != second:
        raise ValueError("the two expressions for the local scalars disagree; array is not valid")
    return first


# text format


_KEYS = ("field", "d", "theta", "theta_star", "varphi", "phi")


def parse_parameter_file(text: str) -> ParameterArray:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise ParameterFileError(f"line {lineno}: expected 'key: value' with key in {', '.join(_KEYS)}")
        if key in values:
            raise ParameterFileError(f"line {lineno}: duplicate key {key!r}")
        values[key] = rest.strip()
    missing = [k for k in _KEYS if k not in values]
    if missing:
        raise ParameterFileError(f"missing keys: {', '.join(missing)}")
    try:
        fld = Field.parse_header(values["field"])
        try:
            d = int(values["d"])
        except ValueError:
            raise ParameterFileError(f"d must be an integer, got {values['d']!r}") from None
        if d < 0:
            raise ParameterFileError("d must be nonnegative")
        seqs = {}
        for key, n in (("theta", d + 1), ("theta_star", d + 1), ("varphi", d), ("phi", d)):
            items = values[key].split()
            if len(items) != n:
                raise ParameterFileError(f"{key} needs {n} entries, got {len(items)}")
            seqs[key] = tuple(fld.parse(x) for x in items)
    except FieldParseError as exc:
        raise ParameterFileError(str(exc)) from None
    return ParameterArray(fld, seqs["theta"], seqs["theta_star"], seqs["varphi"], seqs["phi"])


def format_parameter_file(pa: ParameterArray) -> str:
    j = lambda xs: " ".join(str(x) for x in xs)  # noqa: E731
    return (
        f"field: {pa.field}\n"
        f"d: {pa.d}\n"
        f"theta: {j(pa.theta)}\n"
        f"theta_star: {j(pa.theta_star)}\n"
        f"varphi: {j(pa.varphi)}\n"
        f"phi: {j(pa.phi)}\n"
    )
