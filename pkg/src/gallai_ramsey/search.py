"""Backtracking over red/blue colorings of K_n avoiding a red and a blue pattern.

Edges are assigned in lexicographic ``(min, max)`` order.  After every
assignment only copies through the new edge are looked for, since the partial
coloring was clean before it.  Red is color 1 and blue is color 2 whenever a
search result is turned into an :class:`EdgeColoring`.
"""

from __future__ import annotations

import enum
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .coloring import (K2, K3, K4, K4PLUS, EdgeColoring, Pattern, find_embedding, iter_bits,
                       naive_mono_oracle)
from .errors import IntegrityError, ParameterError

RED, BLUE = 1, 2


class Mode(str, enum.Enum):
    FIND_ONE = "FIND_ONE"
    PROVE_NONE = "PROVE_NONE"


class Verdict(str, enum.Enum):
    FOUND = "FOUND"
    NONE_EXIST = "NONE_EXIST"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass
class SearchTask:
    n: int
    red_pattern: Pattern
    blue_pattern: Pattern
    mode: Mode = Mode.FIND_ONE
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"search needs n >= 2, got {self.n}")
        self.mode = Mode(self.mode)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "red": self.red_pattern.label,
            "blue": self.blue_pattern.label,
            "mode": self.mode.value,
            "node_budget": self.node_budget,
            "time_budget": self.time_budget,
        }


@dataclass
class SearchOutcome:
    verdict: Verdict
    coloring: Optional[EdgeColoring] = None
    nodes_explored: int = 0
    elapsed: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "verdict": self.verdict.value,
            "nodes_explored": self.nodes_explored,
            "witness": None if self.coloring is None else self.coloring.rows(),
        }
        if timings:
            d["elapsed"] = self.elapsed
        return d


# incremental "does the newest edge complete a copy" tests -----------------------

def _closes_k3(adj, u, v):
    return adj[u] & adj[v] != 0


def _closes_k4(adj, u, v):
    common = adj[u] & adj[v]
    for w in iter_bits(common):
        if adj[w] & common:
            return True
    return False


def _has_triangle(adj, mask):
    for w in iter_bits(mask):
        rest = mask & adj[w]
        for x in iter_bits(rest):
            if rest & adj[x]:
                return True
    return False


def _closes_k4plus(adj, u, v):
    common = adj[u] & adj[v]
    # uv inside the K4
    for w in iter_bits(common):
        for x in iter_bits(common & adj[w] & ~((1 << (w + 1)) - 1)):
            inside = (1 << u) | (1 << v) | (1 << w) | (1 << x)
            if (adj[u] | adj[v] | adj[w] | adj[x]) & ~inside:
                return True
    # uv is the pendant edge, apex u or apex v
    if _has_triangle(adj, adj[u] & ~(1 << v)):
        return True
    return _has_triangle(adj, adj[v] & ~(1 << u))


def _closes_generic(pattern):
    def closes(adj, u, v):
        n = len(adj)
        for a, b in pattern.edges:
            if find_embedding(adj, n, pattern, {a: u, b: v}) is not None:
                return True
            if find_embedding(adj, n, pattern, {a: v, b: u}) is not None:
                return True
        return False
    return closes


def closing_test(pattern: Pattern):
    """Function ``(adj, u, v) -> bool`` telling whether edge uv completes a copy of ``pattern``."""
    if pattern.same_graph(K2):
        return lambda adj, u, v: True
    if pattern.same_graph(K3):
        return _closes_k3
    if pattern.same_graph(K4):
        return _closes_k4
    if pattern.same_graph(K4PLUS):
        return _closes_k4plus
    return _closes_generic(pattern)


# engine ------------------------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


_shared_counter = None  # multiprocessing.Value in worker processes


def _init_worker(counter):
    global _shared_counter
    _shared_counter = counter


class _Engine:
    def __init__(self, n, red, blue, node_budget=None, deadline=None):
        self.n = n
        self.edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.tests = {RED: closing_test(red), BLUE: closing_test(blue)}
        self.adj = {RED: [0] * n, BLUE: [0] * n}
        self.assign = [0] * len(self.edges)
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline
        self._flushed = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes & 0x3FF == 0:
            self._flush()
        elif self.node_budget is not None and _shared_counter is None and self.nodes > self.node_budget:
            raise _BudgetExhausted

    def _flush(self):
        total = self.nodes
        if _shared_counter is not None:
            with _shared_counter.get_lock():
                _shared_counter.value += self.nodes - self._flushed
                total = _shared_counter.value
            self._flushed = self.nodes
        if self.node_budget is not None and total > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def place(self, idx, col) -> bool:
        """Assign edge ``idx``; returns False (and undoes it) if a forbidden copy appears."""
        self._tick()
        u, v = self.edges[idx]
        adj = self.adj[col]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if self.tests[col](adj, u, v):
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            return False
        self.assign[idx] = col
        return True

    def remove(self, idx):
        u, v = self.edges[idx]
        adj = self.adj[self.assign[idx]]
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        self.assign[idx] = 0

    def dfs(self, idx, on_leaf) -> bool:
        """Depth-first completion from edge ``idx``; stops when ``on_leaf`` returns True."""
        if idx == len(self.edges):
            return on_leaf()
        for col in (RED, BLUE):
            if self.place(idx, col):
                if self.dfs(idx + 1, on_leaf):
                    return True
                self.remove(idx)
        return False

    def load(self, prefix) -> bool:
        for idx, col in enumerate(prefix):
            if not self.place(idx, col):
                return False
        return True

    def coloring(self) -> EdgeColoring:
        rows = [[] for _ in range(self.n)]
        for (u, _), col in zip(self.edges, self.assign):
            rows[u].append(col)
        return EdgeColoring.from_rows(self.n, 2, rows)


def _star_prefixes(n, red, blue, symmetry):
    """Assignments of vertex 0's star edges to start from, with their orbit weights."""
    if not symmetry:
        return [((), 1)]
    swap = red.same_graph(blue)
    out = []
    for r in range(n - 1, -1, -1):
        if swap and r < n - 1 - r:
            continue
        weight = comb(n - 1, r) * (2 if swap and r != n - 1 - r else 1)
        out.append(((RED,) * r + (BLUE,) * (n - 1 - r), weight))
    return out


def _expand(n, red, blue, prefixes, depth):
    """Extend each star prefix to every surviving assignment of the first ``depth`` edges."""
    out = []
    for prefix, weight in prefixes:
        eng = _Engine(n, red, blue)
        if not eng.load(prefix):
            continue
        if depth <= len(prefix):
            out.append((prefix, weight))
            continue

        def grow(idx):
            if idx == depth:
                out.append((tuple(eng.assign[:depth]), weight))
                return
            for col in (RED, BLUE):
                if eng.place(idx, col):
                    grow(idx + 1)
                    eng.remove(idx)

        grow(len(prefix))
    return out


def _run_subtree(n, red, blue, prefix, find, node_budget, deadline):
    """Returns ``(status, rows_or_count, nodes)`` with status in found/none/budget."""
    eng = _Engine(n, red, blue, node_budget, deadline)
    count = 0

    def leaf():
        nonlocal count
        count += 1
        return find

    try:
        if not eng.load(prefix):
            return "none", 0, eng.nodes
        if eng.dfs(len(prefix), leaf):
            return "found", eng.coloring().rows(), eng.nodes
    except _BudgetExhausted:
        return "budget", count, eng.nodes
    finally:
        if _shared_counter is not None:
            with _shared_counter.get_lock():
                _shared_counter.value += eng.nodes - eng._flushed
    return "none", count, eng.nodes


def _verify_witness(c: EdgeColoring, red: Pattern, blue: Pattern) -> None:
    if naive_mono_oracle(c, red, RED) is not None or naive_mono_oracle(c, blue, BLUE) is not None:
        raise IntegrityError("search produced a coloring that contains a forbidden copy")


def _dispatch(task: SearchTask, symmetry: bool, find: bool, threads: int, split_depth: Optional[int]):
    n, red, blue = task.n, task.red_pattern, task.blue_pattern
    start = time.monotonic()
    deadline = None if task.time_budget is None else start + task.time_budget
    prefixes = _star_prefixes(n, red, blue, symmetry)
    if threads > 1:
        depth = split_depth if split_depth is not None else min(len(_edge_list(n)), (n - 1) + n - 2)
        prefixes = _expand(n, red, blue, prefixes, depth)
    results = []
    if threads > 1 and len(prefixes) > 1:
        counter = multiprocessing.Value("q", 0)
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(counter,)) as pool:
            futures = [pool.submit(_run_subtree, n, red, blue, p, find, task.node_budget, deadline)
                       for p, _ in prefixes]
            for fut in futures:
                results.append(fut.result())
                if find and results[-1][0] == "found":
                    for rest in futures:
                        rest.cancel()
                    break
    else:
        remaining = task.node_budget
        for p, _ in prefixes:
            res = _run_subtree(n, red, blue, p, find, remaining, deadline)
            results.append(res)
            if remaining is not None:
                remaining -= res[2]
            if res[0] == "budget" or (find and res[0] == "found"):
                break
    elapsed = time.monotonic() - start
    return results, prefixes, elapsed


def _edge_list(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _solve(task: SearchTask, symmetry: bool, threads: int, split_depth: Optional[int]) -> SearchOutcome:
    results, _, elapsed = _dispatch(task, symmetry, True, threads, split_depth)
    nodes = sum(r[2] for r in results)
    for status, payload, _ in results:
        if status == "found":
            c = EdgeColoring.from_rows(task.n, 2, payload)
            _verify_witness(c, task.red_pattern, task.blue_pattern)
            return SearchOutcome(Verdict.FOUND, c, nodes, elapsed)
        if status == "budget":
            return SearchOutcome(Verdict.BUDGET_EXHAUSTED, None, nodes, elapsed)
    return SearchOutcome(Verdict.NONE_EXIST, None, nodes, elapsed)


def search_sharpness(task: SearchTask, threads: int = 1, split_depth: Optional[int] = None) -> SearchOutcome:
    """First coloring (in lexicographic edge order) with no red/blue forbidden copy."""
    return _solve(task, False, threads, split_depth)


def prove_upper_bound(task: SearchTask, threads: int = 1, split_depth: Optional[int] = None) -> SearchOutcome:
    """Exhaustive search with star canonicalization (and color swap for equal patterns).

    NONE_EXIST certifies every red/blue coloring of K_n has a red ``red_pattern`` or
    a blue ``blue_pattern``.
    """
    return _solve(task, True, threads, split_depth)


@dataclass
class Census:
    count: Optional[int]
    nodes_explored: int
    per_prefix: list = field(default_factory=list)
    exhausted: bool = False


def census(n: int, red: Pattern, blue: Pattern, symmetry: bool = True,
           node_budget: Optional[int] = None, threads: int = 1) -> Census:
    """Exact number of labeled red/blue colorings of K_n avoiding both patterns.

    With ``symmetry`` the pruned prover only visits canonical stars; each star with
    ``r`` red edges stands for ``C(n-1, r)`` relabelings (doubled under color swap).
    """
    task = SearchTask(n, red, blue, Mode.PROVE_NONE, node_budget)
    results, prefixes, _ = _dispatch(task, symmetry, False, threads, None)
    nodes = sum(r[2] for r in results)
    if any(r[0] == "budget" for r in results) or len(results) < len(prefixes):
        return Census(None, nodes, exhausted=True)
    per = [(p, w, r[1]) for (p, w), r in zip(prefixes, results)]
    return Census(sum(w * cnt for _, w, cnt in per), nodes, per)


def brute_force_count(n: int, red: Pattern, blue: Pattern) -> int:
    """Count valid colorings by trying all ``2^C(n,2)`` assignments (no pruning)."""
    edges = _edge_list(n)
    total = 0
    for bits in range(1 << len(edges)):
        c = EdgeColoring.from_rows(n, 2, _bits_to_rows(n, edges, bits))
        if naive_mono_oracle(c, red, RED) is None and naive_mono_oracle(c, blue, BLUE) is None:
            total += 1
    return total


def _bits_to_rows(n, edges, bits):
    rows = [[] for _ in range(n)]
    for i, (u, _) in enumerate(edges):
        rows[u].append(BLUE if bits >> i & 1 else RED)
    return rows
