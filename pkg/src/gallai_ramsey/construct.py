"""Blow-ups, the three two-color sharpness colorings, and the recursive extremal construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

from .coloring import (K3, K4, EdgeColoring, TargetProfile, find_any_violation, find_mono_pattern,
                       find_rainbow_triangle, naive_mono_oracle, new_complete)
from .errors import IntegrityError, ParameterError
from .formulas import f


@dataclass
class BlowupSpec:
    base: EdgeColoring
    inserts: list

    def __post_init__(self):
        if len(self.inserts) != self.base.n:
            raise ParameterError(f"need {self.base.n} inserts, got {len(self.inserts)}")
        for ins in self.inserts:
            if ins.k != self.base.k:
                raise ParameterError(f"insert uses k={ins.k} but base uses k={self.base.k}")

    @property
    def order(self) -> int:
        return sum(ins.n for ins in self.inserts)


def blow_up(spec: BlowupSpec) -> EdgeColoring:
    """Replace base vertex ``i`` by ``inserts[i]``; edges between blocks take the base color."""
    block = []
    offset = []
    for b, ins in enumerate(spec.inserts):
        offset.append(len(block))
        block.extend([b] * ins.n)
    base, inserts = spec.base, spec.inserts

    def color(u, v):
        bu, bv = block[u], block[v]
        if bu == bv:
            return inserts[bu].color(u - offset[bu], v - offset[bu])
        return base.color(bu, bv)

    return EdgeColoring.from_function(len(block), base.k, color)


def blow_up_uniform(base: EdgeColoring, insert: EdgeColoring) -> EdgeColoring:
    return blow_up(BlowupSpec(base, [insert] * base.n))


# sharpness colorings (red = 1, blue = 2) -----------------------------------------

def _two_color_check(c: EdgeColoring, red, blue, name: str) -> EdgeColoring:
    if find_mono_pattern(c, red, 1) is not None or find_mono_pattern(c, blue, 2) is not None:
        raise IntegrityError(f"{name} contains a forbidden monochromatic copy")
    if naive_mono_oracle(c, red, 1) is not None or naive_mono_oracle(c, blue, 2) is not None:
        raise IntegrityError(f"{name} fails the reference oracle")
    return c


@lru_cache(maxsize=None)
def _q1() -> EdgeColoring:
    c = EdgeColoring.from_function(5, 2, lambda u, v: 1 if (v - u) % 5 in (1, 4) else 2)
    return _two_color_check(c, K3, K3, "Q1")


@lru_cache(maxsize=None)
def _q2() -> EdgeColoring:
    squares = {x * x % 17 for x in range(1, 17)}
    c = EdgeColoring.from_function(17, 2, lambda u, v: 1 if (u - v) % 17 in squares else 2)
    # no monochromatic K4 at all, which rules out K4PLUS in both colors
    return _two_color_check(c, K4, K4, "Q2")


@lru_cache(maxsize=None)
def _q3() -> EdgeColoring:
    from .formats import parse_coloring

    text = resources.files("gallai_ramsey").joinpath("data/q3.txt").read_text()
    c = parse_coloring(text)
    if c.n != 8 or c.k != 2:
        raise IntegrityError("stored Q3 must be a 2-colored K8")
    # red K4-free is needed so blocks of a blow-up cannot supply a red pendant
    return _two_color_check(c, K4, K3, "Q3")


def q1() -> EdgeColoring:
    """Red 5-cycle 0-1-2-3-4-0, blue complement: no monochromatic triangle."""
    return _q1().copy()


def q2() -> EdgeColoring:
    """Quadratic-residue coloring of K17: red iff the difference is a nonzero square mod 17."""
    return _q2().copy()


def q3() -> EdgeColoring:
    """Search-derived K8 with no red K4 (hence no red K4PLUS) and no blue triangle."""
    return _q3().copy()


# recursive construction -----------------------------------------------------------

CASE_FACTOR = {"a": 17, "b": 4, "c": 8, "d": 2, "e": 5}
_CASE_BASE = {"a": "Q2", "b": "K4", "c": "Q3", "d": "K2", "e": "Q1"}


@dataclass
class ConstructionTrace:
    k: int
    s: int
    steps: list = field(default_factory=list)  # (case, colors, base description)
    final_order: int = 1

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "steps": [{"case": c, "colors": list(cols), "base": b} for c, cols, b in self.steps],
            "final_order": self.final_order,
        }


def plan_extremal(k: int, s: int) -> ConstructionTrace:
    """The sequence of blow-up cases for ``(k, s)`` and the resulting order, without building."""
    if k < 1 or not 0 <= s <= k:
        raise ParameterError(f"need k >= 1 and 0 <= s <= k, got k={k}, s={s}")
    trace = ConstructionTrace(k, s)
    i, order = 0, 1
    while i < k:
        if i == s - 1 and k == s:
            case = "b"
        elif i == s - 1 and k > s:
            case = "c"
        elif i <= s - 2:
            case = "a"
        elif i >= s and i == k - 1:
            case = "d"
        elif s <= i <= k - 2:
            case = "e"
        else:  # pragma: no cover - the guards cover every 0 <= i < k
            raise IntegrityError(f"no construction case for i={i}, k={k}, s={s}")
        width = 1 if case in "bd" else 2
        colors = tuple(range(i + 1, i + 1 + width))
        order *= CASE_FACTOR[case]
        trace.steps.append((case, colors, _CASE_BASE[case]))
        i += width
    trace.final_order = order
    return trace


def _case_base(case: str, colors: tuple, k: int) -> EdgeColoring:
    if case == "b":
        return new_complete(4, k, colors[0])
    if case == "d":
        return new_complete(2, k, colors[0])
    src = {"a": q2, "c": q3, "e": q1}[case]()
    return src.recolored({1: colors[0], 2: colors[1]}, k)


def build_extremal(k: int, s: int) -> tuple:
    """Build ``G_k`` for the profile ``(s, k)``; returns ``(coloring, trace)``."""
    trace = plan_extremal(k, s)
    g = new_complete(1, k, 1)
    for case, colors, _ in trace.steps:
        g = blow_up_uniform(_case_base(case, colors, k), g)
    if g.n != trace.final_order or g.n != f(k, s):
        raise IntegrityError(f"built order {g.n} differs from f({k},{s}) = {f(k, s)}")
    return g, trace


@dataclass
class VerificationReport:
    k: int
    s: int
    order: int
    expected_order: int
    gallai: bool
    rainbow_triangle: Optional[tuple]
    violation: Optional[tuple]  # (color, embedding)
    trace: ConstructionTrace
    notes: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return self.gallai and self.violation is None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "order": self.order,
            "expected_order": self.expected_order,
            "gallai": self.gallai,
            "rainbow_triangle": None if self.rainbow_triangle is None else list(self.rainbow_triangle),
            "violation": None if self.violation is None else {
                "color": self.violation[0], "embedding": list(self.violation[1])},
            "clean": self.clean,
            "trace": self.trace.to_dict(),
            "notes": list(self.notes),
        }


def check_coloring(c: EdgeColoring, s: int, k: Optional[int] = None) -> tuple:
    """``(rainbow_triangle_or_None, violation_or_None)`` for the profile ``(s, k)``."""
    profile = TargetProfile(s, c.k if k is None else k)
    return find_rainbow_triangle(c), find_any_violation(c, profile)


def verify_extremal(k: int, s: int) -> VerificationReport:
    """Build ``G_k`` and report what the detectors find (nothing is assumed)."""
    g, trace = build_extremal(k, s)
    tri, viol = check_coloring(g, s, k)
    rep = VerificationReport(k, s, g.n, f(k, s), tri is None, tri, viol, trace)
    order = 1
    for case, colors, _ in trace.steps:
        if case == "b" and order >= 2:
            rep.notes.append(
                f"case b blows up a color-{colors[0]} K4 over blocks of order {order}: the "
                f"color-{colors[0]} layer is complete 4-partite with a part of size >= 2, "
                "which contains K4PLUS")
        order *= CASE_FACTOR[case]
    return rep
