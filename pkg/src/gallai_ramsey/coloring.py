"""Edge-colored complete graphs and monochromatic pattern detection.

Vertices are dense integers ``0..n-1``; colors are ``1..k``.  Every color keeps
one adjacency bitset per vertex (a Python int), updated on each ``set_color``,
so the clique detectors reduce to bitset intersections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import ParameterError

Embedding = tuple  # host vertex for each pattern vertex, indexed by pattern vertex


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def _above(v: int) -> int:
    # mask clearing bits 0..v
    return ~((1 << (v + 1)) - 1)


class EdgeColoring:
    """A complete graph on ``n`` vertices whose edges carry colors in ``1..k``."""

    __slots__ = ("n", "k", "_mat", "_adj")

    def __init__(self, n: int, k: int, fill: int = 1):
        if n < 1:
            raise ParameterError(f"vertex count must be >= 1, got {n}")
        if k < 1:
            raise ParameterError(f"color count must be >= 1, got {k}")
        if not 1 <= fill <= k:
            raise ParameterError(f"fill color {fill} outside 1..{k}")
        self.n = n
        self.k = k
        self._mat = [[fill] * n for _ in range(n)]
        for v in range(n):
            self._mat[v][v] = 0
        full = (1 << n) - 1
        self._adj = [[0] * n for _ in range(k + 1)]
        self._adj[fill] = [full & ~(1 << v) for v in range(n)]

    @classmethod
    def from_function(cls, n: int, k: int, fn: Callable[[int, int], int]) -> "EdgeColoring":
        """Build a coloring with ``color(u, v) = fn(u, v)`` for ``u < v``."""
        c = cls(n, k, 1)
        for u in range(n):
            for v in range(u + 1, n):
                c.set_color(u, v, fn(u, v))
        return c

    @classmethod
    def from_rows(cls, n: int, k: int, rows) -> "EdgeColoring":
        """Inverse of :meth:`rows`: ``rows[u][j]`` is the color of ``{u, u+1+j}``."""
        c = cls(n, k, 1)
        for u, row in enumerate(rows):
            for j, col in enumerate(row):
                c.set_color(u, u + 1 + j, col)
        return c

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise ParameterError(f"no self-loop edge at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ParameterError(f"edge ({u},{v}) out of range for n={self.n}")

    def color(self, u: int, v: int) -> int:
        self._check_pair(u, v)
        return self._mat[u][v]

    def set_color(self, u: int, v: int, c: int) -> None:
        self._check_pair(u, v)
        if not 1 <= c <= self.k:
            raise ParameterError(f"color {c} outside 1..{self.k}")
        old = self._mat[u][v]
        if old == c:
            return
        self._mat[u][v] = self._mat[v][u] = c
        self._adj[old][u] &= ~(1 << v)
        self._adj[old][v] &= ~(1 << u)
        self._adj[c][u] |= 1 << v
        self._adj[c][v] |= 1 << u

    def neighbors(self, c: int, v: int) -> int:
        """Bitset of vertices joined to ``v`` by a color-``c`` edge."""
        return self._adj[c][v]

    def layer(self, c: int) -> list:
        """Adjacency bitsets of the color-``c`` spanning subgraph."""
        if not 1 <= c <= self.k:
            raise ParameterError(f"color {c} outside 1..{self.k}")
        return list(self._adj[c])

    def degree(self, c: int, v: int) -> int:
        return self._adj[c][v].bit_count()

    def rows(self) -> list:
        return [self._mat[u][u + 1:] for u in range(self.n)]

    def edges(self) -> Iterator[tuple]:
        """Yield ``(u, v, color)`` for ``u < v`` in lexicographic order."""
        for u in range(self.n):
            row = self._mat[u]
            for v in range(u + 1, self.n):
                yield u, v, row[v]

    def colors_used(self) -> list:
        return [c for c in range(1, self.k + 1) if any(self._adj[c])]

    def copy(self) -> "EdgeColoring":
        other = EdgeColoring.__new__(EdgeColoring)
        other.n, other.k = self.n, self.k
        other._mat = [row[:] for row in self._mat]
        other._adj = [layer[:] for layer in self._adj]
        return other

    def recolored(self, mapping: dict, k: Optional[int] = None) -> "EdgeColoring":
        """Copy with every color ``c`` replaced by ``mapping[c]`` in a ``k``-color universe."""
        k = self.k if k is None else k
        return EdgeColoring.from_function(self.n, k, lambda u, v: mapping[self._mat[u][v]])

    def induced(self, vertices) -> "EdgeColoring":
        vs = list(vertices)
        return EdgeColoring.from_function(len(vs), self.k, lambda a, b: self._mat[vs[a]][vs[b]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self._mat == other._mat

    __hash__ = None

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, k={self.k})"


def new_complete(n: int, k: int, fill: int) -> EdgeColoring:
    return EdgeColoring(n, k, fill)


@dataclass(frozen=True)
class Pattern:
    m: int
    edges: frozenset
    name: Optional[str] = None

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError("pattern needs at least one vertex")
        norm = set()
        for e in self.edges:
            a, b = e
            if a == b:
                raise ParameterError(f"pattern loop at {a}")
            if not (0 <= a < self.m and 0 <= b < self.m):
                raise ParameterError(f"pattern edge {e} out of range for m={self.m}")
            pair = (min(a, b), max(a, b))
            if pair in norm:
                raise ParameterError(f"duplicate pattern edge {pair}")
            norm.add(pair)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, m: int, edges, name: Optional[str] = None) -> "Pattern":
        return cls(m, frozenset(tuple(e) for e in edges), name)

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def neighbors(self, i: int) -> list:
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))

    def same_graph(self, other: "Pattern") -> bool:
        return self.m == other.m and self.edges == other.edges

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return f"{self.m}:" + ",".join(f"{a}-{b}" for a, b in sorted(self.edges))

    def __str__(self) -> str:
        return self.label


def _complete_pattern(m: int, name: str) -> Pattern:
    return Pattern.from_edges(m, [(a, b) for a in range(m) for b in range(a + 1, m)], name)


K2 = _complete_pattern(2, "K2")
K3 = _complete_pattern(3, "K3")
K4 = _complete_pattern(4, "K4")
# triangle 0,1,2; apex 3 joined to the triangle; pendant 4 joined to the apex only
K4PLUS = Pattern.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)], "K4PLUS")

BUILTIN_PATTERNS = {p.name: p for p in (K2, K3, K4, K4PLUS)}


def parse_pattern(text: str) -> Pattern:
    """Resolve a built-in name (``K3``, ``K4PLUS``, ...) or an edge list ``m:a-b,c-d``."""
    key = text.strip().upper().replace("+", "PLUS")
    if key in BUILTIN_PATTERNS:
        return BUILTIN_PATTERNS[key]
    try:
        m_text, _, edge_text = text.partition(":")
        m = int(m_text)
        edges = []
        for tok in filter(None, edge_text.split(",")):
            a, b = tok.split("-")
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise ParameterError(f"unrecognized pattern {text!r}") from exc
    return Pattern.from_edges(m, edges)


@dataclass(frozen=True)
class TargetProfile:
    """Forbid K4PLUS in colors ``1..s`` and K3 in colors ``s+1..k``."""

    s: int
    k: int

    def __post_init__(self):
        if self.k < 1 or not 0 <= self.s <= self.k:
            raise ParameterError(f"invalid profile s={self.s}, k={self.k}")

    def pattern_for(self, color: int) -> Pattern:
        return K4PLUS if color <= self.s else K3


def validate_embedding(c: EdgeColoring, p: Pattern, color: int, emb) -> bool:
    if emb is None or len(emb) != p.m or len(set(emb)) != p.m:
        return False
    if any(not 0 <= v < c.n for v in emb):
        return False
    return all(c.color(emb[a], emb[b]) == color for a, b in p.edges)


# rainbow triangles ------------------------------------------------------------

def find_rainbow_triangle(c: EdgeColoring) -> Optional[tuple]:
    """Lexicographically first triangle with three distinct edge colors, if any."""
    if c.k < 3:
        return None
    n, mat, adj = c.n, c._mat, c._adj
    used = c.colors_used()
    if len(used) < 3:
        return None
    for u in range(n):
        for v in range(u + 1, n):
            a = mat[u][v]
            same = 0
            for col in used:
                same |= adj[col][u] & adj[col][v]
            cand = ~adj[a][u] & ~adj[a][v] & ~same & _above(v) & ((1 << n) - 1)
            if cand:
                return (u, v, lowest_bit(cand))
    return None


def is_gallai(c: EdgeColoring) -> bool:
    return find_rainbow_triangle(c) is None


# fast detectors ------------------------------------------------------------------

def _find_edge(adj: list) -> Optional[tuple]:
    for u, nu in enumerate(adj):
        hi = nu & _above(u)
        if hi:
            return (u, lowest_bit(hi))
    return None


def _find_triangle(adj: list) -> Optional[tuple]:
    for u, nu in enumerate(adj):
        for v in iter_bits(nu & _above(u)):
            common = nu & adj[v] & _above(v)
            if common:
                return (u, v, lowest_bit(common))
    return None


def iter_k4(adj: list) -> Iterator[tuple]:
    """All 4-cliques ``u < v < w < x`` in lexicographic order."""
    for u, nu in enumerate(adj):
        for v in iter_bits(nu & _above(u)):
            p = nu & adj[v] & _above(v)
            for w in iter_bits(p):
                for x in iter_bits(p & adj[w] & _above(w)):
                    yield (u, v, w, x)


def _find_k4plus(adj: list) -> Optional[tuple]:
    # K4 is vertex-transitive, so any clique vertex with an outside neighbor is an apex
    for quad in iter_k4(adj):
        inside = 0
        for q in quad:
            inside |= 1 << q
        out = 0
        for q in quad:
            out |= adj[q]
        out &= ~inside
        if out:
            y = lowest_bit(out)
            apex = next(q for q in quad if adj[q] >> y & 1)
            tri = tuple(q for q in quad if q != apex)
            return tri + (apex, y)
    return None


def _search_order(p: Pattern) -> list:
    order = []
    left = set(range(p.m))
    while left:
        placed = set(order)
        best = max(left, key=lambda i: (len(set(p.neighbors(i)) & placed), p.degree(i), -i))
        order.append(best)
        left.remove(best)
    return order


def find_embedding(adj: list, n: int, p: Pattern, fixed: Optional[dict] = None) -> Optional[tuple]:
    """Backtracking subgraph search over color-layer bitsets with degree pruning.

    ``fixed`` pre-assigns some pattern vertices to host vertices.
    """
    if p.m > n:
        return None
    fixed = fixed or {}
    nbrs = [p.neighbors(i) for i in range(p.m)]
    deg = [len(x) for x in nbrs]
    host_deg = [a.bit_count() for a in adj]
    order = [i for i in _search_order(p) if i not in fixed]
    host = dict(fixed)
    for a, b in p.edges:
        if a in host and b in host and not adj[host[a]] >> host[b] & 1:
            return None
    if len(set(host.values())) != len(host):
        return None
    full = (1 << n) - 1

    def rec(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        i = order[idx]
        cand = full & ~used
        for j in nbrs[i]:
            if j in host:
                cand &= adj[host[j]]
        for h in iter_bits(cand):
            if host_deg[h] < deg[i]:
                continue
            host[i] = h
            if rec(idx + 1, used | (1 << h)):
                return True
            del host[i]
        return False

    used = 0
    for h in host.values():
        used |= 1 << h
    if rec(0, used):
        return tuple(host[i] for i in range(p.m))
    return None


def find_mono_pattern(c: EdgeColoring, p: Pattern, color: int) -> Optional[tuple]:
    """Embedding of ``p`` whose edges all have ``color`` (subgraph semantics), or None."""
    if not 1 <= color <= c.k:
        raise ParameterError(f"color {color} outside 1..{c.k}")
    if p.m > c.n:
        return None
    adj = c._adj[color]
    if p.same_graph(K2):
        return _find_edge(adj)
    if p.same_graph(K3):
        return _find_triangle(adj)
    if p.same_graph(K4):
        return next(iter_k4(adj), None)
    if p.same_graph(K4PLUS):
        return _find_k4plus(adj)
    return find_embedding(adj, c.n, p)


def naive_mono_oracle(c: EdgeColoring, p: Pattern, color: int) -> Optional[tuple]:
    """Reference detector: enumerate injective maps in pattern-vertex order.

    Reads only the color matrix, never the bitsets, and prunes by degree and by
    rejecting a partial map as soon as one of its pattern edges is miscolored.
    """
    n, m = c.n, p.m
    if m > n:
        return None
    mat = c._mat
    host_deg = [sum(1 for w in range(n) if w != v and mat[v][w] == color) for v in range(n)]
    deg = [p.degree(i) for i in range(m)]
    back = [[j for j in p.neighbors(i) if j < i] for i in range(m)]
    emb = [-1] * m
    used = [False] * n

    def rec(i: int) -> bool:
        if i == m:
            return True
        for h in range(n):
            if used[h] or host_deg[h] < deg[i]:
                continue
            if all(mat[emb[j]][h] == color for j in back[i]):
                emb[i] = h
                used[h] = True
                if rec(i + 1):
                    return True
                used[h] = False
        return False

    return tuple(emb) if rec(0) else None


def find_any_violation(c: EdgeColoring, t: TargetProfile) -> Optional[tuple]:
    """First ``(color, embedding)`` of a forbidden monochromatic pattern, scanning colors upward."""
    if c.k > t.k:
        raise ParameterError(f"coloring uses k={c.k} colors but profile has k={t.k}")
    for color in range(1, c.k + 1):
        emb = find_mono_pattern(c, t.pattern_for(color), color)
        if emb is not None:
            return color, emb
    return None
