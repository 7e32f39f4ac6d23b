"""Gallai partitions, reduced graphs, and the part bookkeeping used in the upper-bound analysis."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .coloring import EdgeColoring, find_rainbow_triangle, iter_bits
from .errors import InternalInvariantError, ParameterError, PreconditionError


@dataclass(frozen=True)
class GallaiPartition:
    parts: tuple           # tuple of sorted vertex tuples, ordered by smallest vertex
    between_colors: tuple  # sorted, length 1 or 2
    quotient: dict         # (i, j) with i < j -> color

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def red(self) -> int:
        return self.between_colors[0]

    @property
    def blue(self) -> Optional[int]:
        return self.between_colors[1] if len(self.between_colors) > 1 else None

    def quotient_color(self, i: int, j: int) -> int:
        if i == j:
            raise ParameterError("a part has no quotient color with itself")
        return self.quotient[(i, j) if i < j else (j, i)]

    def quotient_coloring(self, k: int) -> EdgeColoring:
        """One vertex per part, edges colored by the quotient."""
        return EdgeColoring.from_function(self.t, k, self.quotient_color)

    def to_dict(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "between_colors": list(self.between_colors),
            "quotient": [[0 if i == j else self.quotient_color(i, j) for j in range(self.t)]
                         for i in range(self.t)],
        }


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def make_partition(c: EdgeColoring, parts, between_colors=None) -> GallaiPartition:
    """Canonicalize ``parts`` and read the quotient off ``c``; validates the result."""
    ordered = tuple(sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0]))
    quotient = {}
    for i, j in combinations(range(len(ordered)), 2):
        quotient[(i, j)] = c.color(ordered[i][0], ordered[j][0])
    if between_colors is None:
        between_colors = set(quotient.values())
    gp = GallaiPartition(ordered, tuple(sorted(between_colors)), quotient)
    validate_partition(c, gp)
    return gp


def validate_partition(c: EdgeColoring, gp: GallaiPartition) -> None:
    """Raise ParameterError unless ``gp`` is a Gallai partition of ``c``."""
    if gp.t < 2:
        raise ParameterError(f"a Gallai partition needs >= 2 parts, got {gp.t}")
    seen = 0
    for p in gp.parts:
        if not p:
            raise ParameterError("empty part")
        m = _mask(p)
        if m & seen or len(set(p)) != len(p):
            raise ParameterError("parts overlap")
        seen |= m
    if seen != (1 << c.n) - 1:
        raise ParameterError("parts do not cover the vertex set")
    if not 1 <= len(gp.between_colors) <= 2:
        raise ParameterError(f"between_colors must have 1 or 2 colors, got {gp.between_colors}")
    for i, j in combinations(range(gp.t), 2):
        col = gp.quotient.get((i, j))
        if col not in gp.between_colors:
            raise ParameterError(f"quotient color {col} of parts ({i},{j}) not in between_colors")
        other = _mask(gp.parts[j])
        for u in gp.parts[i]:
            if c.neighbors(col, u) & other != other:
                raise ParameterError(f"edges between parts {i} and {j} are not all color {col}")


def _fixpoint(c: EdgeColoring, B: tuple) -> list:
    """Finest partition whose between-part edges are monochromatic with colors in ``B``."""
    n = c.n
    outside = [col for col in range(1, c.k + 1) if col not in B]
    # components of the graph of non-B edges
    f_adj = [0] * n
    for col in outside:
        layer = c.layer(col)
        for v in range(n):
            f_adj[v] |= layer[v]
    parts = []
    left = (1 << n) - 1
    while left:
        start = left & -left
        comp = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= f_adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        parts.append(comp)
        left &= ~comp

    def common(mask, col):
        acc = (1 << n) - 1
        for v in iter_bits(mask):
            acc &= c.neighbors(col, v)
        return acc

    changed = True
    while changed and len(parts) > 1:
        changed = False
        cover = [{col: common(p, col) for col in B} for p in parts]
        for i, j in combinations(range(len(parts)), 2):
            if not any(parts[j] & cover[i][col] == parts[j] for col in B):
                parts[i] |= parts[j]
                del parts[j]
                changed = True
                break
    return [tuple(iter_bits(p)) for p in parts]


def find_gallai_partition(c: EdgeColoring) -> GallaiPartition:
    """Finest Gallai partition over all candidate between-color sets.

    Candidates are every used color alone, then every pair of used colors.  Ties on
    the part count go to the lexicographically smallest color set.
    """
    if c.n < 2:
        raise ParameterError("a Gallai partition needs n >= 2")
    tri = find_rainbow_triangle(c)
    if tri is not None:
        raise PreconditionError(f"coloring is not Gallai: rainbow triangle {tri}", witness=tri)
    used = c.colors_used()
    candidates = [(col,) for col in used] + list(combinations(used, 2))
    best = None
    for B in candidates:
        parts = _fixpoint(c, B)
        if len(parts) < 2:
            continue
        key = (-len(parts), B)
        if best is None or key < best[0]:
            best = (key, B, parts)
    if best is None:
        raise InternalInvariantError("no candidate color set produced a Gallai partition")
    _, B, parts = best
    return make_partition(c, parts, B)


@dataclass(frozen=True)
class ReducedGraph:
    t: int
    red: int
    blue: Optional[int]
    colors: dict  # (i, j), i < j -> color

    def color(self, i: int, j: int) -> int:
        return self.colors[(i, j) if i < j else (j, i)]

    def red_neighbors(self, i: int) -> set:
        return {j for j in range(self.t) if j != i and self.color(i, j) == self.red}

    def blue_neighbors(self, i: int) -> set:
        return {j for j in range(self.t) if j != i and self.color(i, j) == self.blue}

    def red_degree(self, i: int) -> int:
        return len(self.red_neighbors(i))

    def blue_degree(self, i: int) -> int:
        return len(self.blue_neighbors(i))


def reduce(c: EdgeColoring, gp: GallaiPartition) -> ReducedGraph:
    validate_partition(c, gp)
    return ReducedGraph(gp.t, gp.red, gp.blue, dict(gp.quotient))


def coarsen_to_two(c: EdgeColoring, gp: GallaiPartition) -> Optional[GallaiPartition]:
    """Two-part partition (part, rest) for the first part seeing all others in one color."""
    validate_partition(c, gp)
    for i in range(gp.t):
        outward = {gp.quotient_color(i, j) for j in range(gp.t) if j != i}
        if len(outward) == 1:
            rest = [v for j, p in enumerate(gp.parts) if j != i for v in p]
            return make_partition(c, [gp.parts[i], rest], outward)
    return None


@dataclass(frozen=True)
class PartProfile:
    l: int
    I_r: frozenset
    I_b: frozenset
    p0: int
    p1: int
    p2: int

    def to_dict(self) -> dict:
        return {"l": self.l, "I_r": sorted(self.I_r), "I_b": sorted(self.I_b),
                "p0": self.p0, "p1": self.p1, "p2": self.p2}


def _has_color_inside(c: EdgeColoring, part, col: Optional[int]) -> bool:
    if col is None:
        return False
    m = _mask(part)
    return any(c.neighbors(col, v) & m for v in part)


def classify_parts(c: EdgeColoring, gp: GallaiPartition) -> PartProfile:
    validate_partition(c, gp)
    I_r = frozenset(i for i, p in enumerate(gp.parts) if _has_color_inside(c, p, gp.red))
    I_b = frozenset(i for i, p in enumerate(gp.parts) if _has_color_inside(c, p, gp.blue))
    big = [i for i, p in enumerate(gp.parts) if len(p) >= 2]
    counts = [0, 0, 0]
    for i in big:
        counts[(i in I_r) + (i in I_b)] += 1
    return PartProfile(len(big), I_r, I_b, *counts)
