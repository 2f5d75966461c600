"""Exact search for distance-two colourings (colourings of the square graph).

Backtracking with most-constrained-vertex selection and forward checking on
bitmask domains.  Colour symmetry is broken by only ever introducing the
smallest unused colour, so every colouring is reached at most once up to a
permutation of colours.  The budget counts search nodes, not seconds.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .coloring import VertexColoring, is_distance_two
from .errors import BudgetExceeded, CapExceeded
from .plane_graph import PlaneMultigraph, square_adjacency

DEFAULT_BUDGET = 10**7
DEFAULT_CAP = 120


@dataclass
class SolveStats:
    nodes_explored: int = 0
    solutions_found: int = 0
    wall_budget_exceeded: bool = False


class _Search:
    def __init__(self, g: PlaneMultigraph, r: int, budget: Optional[int], fixed: Mapping[int, int] | None = None):
        self.n = g.vertex_count
        self.r = r
        self.adj = [sorted(s) for s in square_adjacency(g)]
        self.budget = budget
        self.stats = SolveStats()
        self.full = (1 << r) - 1
        self.fixed = dict(fixed or {})

    def run(self) -> Iterator[list[int]]:
        n, adj = self.n, self.adj
        color = [0] * n
        dom = [self.full] * n
        trail: list[tuple[int, int]] = []
        # precoloured vertices disable symmetry breaking for the colours they use
        top = 0
        for v, c in sorted(self.fixed.items()):
            if not (dom[v] >> (c - 1)) & 1:
                return
            color[v] = c
            top = self.r
            for w in adj[v]:
                if color[w] == c:
                    return
                dom[w] &= ~(1 << (c - 1))
        if any(color[v] == 0 and dom[v] == 0 for v in range(n)):
            return
        unassigned = n - len(self.fixed)
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 1000))
        yield from self._rec(color, dom, trail, unassigned, top)

    def _pick(self, color, dom, allowed):
        best, best_key = -1, None
        adj = self.adj
        for v in range(self.n):
            if color[v]:
                continue
            size = bin(dom[v] & allowed).count("1")
            if size <= 1:
                return v
            key = (size, -sum(1 for w in adj[v] if not color[w]))
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def _rec(self, color, dom, trail, unassigned, top):
        if unassigned == 0:
            self.stats.solutions_found += 1
            yield list(color)
            return
        allowed = self.full if top >= self.r else (1 << (top + 1)) - 1
        v = self._pick(color, dom, allowed)
        choices = dom[v] & allowed
        adj = self.adj
        while choices:
            bit = choices & -choices
            choices ^= bit
            self.stats.nodes_explored += 1
            if self.budget is not None and self.stats.nodes_explored > self.budget:
                self.stats.wall_budget_exceeded = True
                return
            c = bit.bit_length()
            color[v] = c
            mark = len(trail)
            ok = True
            for w in adj[v]:
                if not color[w] and dom[w] & bit:
                    dom[w] ^= bit
                    trail.append((w, bit))
                    if not dom[w]:
                        ok = False
                        break
            if ok:
                yield from self._rec(color, dom, trail, unassigned - 1, max(top, c))
                if self.stats.wall_budget_exceeded:
                    return
            while len(trail) > mark:
                w, b = trail.pop()
                dom[w] |= b
            color[v] = 0


def solve(
    g: PlaneMultigraph, r: int, budget: Optional[int] = DEFAULT_BUDGET, fixed: Mapping[int, int] | None = None
) -> tuple[Optional[VertexColoring], SolveStats]:
    """Find a distance-two r-colouring.

    Returns ``(None, stats)`` both when none exists and when the budget ran
    out; ``stats.wall_budget_exceeded`` tells the two apart.  ``fixed``
    precolours some vertices (symmetry breaking is then switched off).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    search = _Search(g, r, budget, fixed)
    for colors in search.run():
        c = VertexColoring(tuple(colors), r)
        assert is_distance_two(g, c)
        return c, search.stats
    return None, search.stats


def iter_colorings(g: PlaneMultigraph, r: int, budget: Optional[int] = None) -> Iterator[VertexColoring]:
    """Every distance-two r-colouring, one representative per colour permutation class."""
    search = _Search(g, r, budget)
    for colors in search.run():
        yield VertexColoring(tuple(colors), r)
    if search.stats.wall_budget_exceeded:
        raise BudgetExceeded(f"more than {budget} nodes")


def count_up_to_permutation(g: PlaneMultigraph, r: int, cap: int = DEFAULT_CAP, budget: Optional[int] = None) -> int:
    if g.vertex_count > cap:
        raise CapExceeded(f"{g.vertex_count} vertices exceeds cap {cap}")
    return len({c.normalized() for c in iter_colorings(g, r, budget)})


def square_chromatic_number(g: PlaneMultigraph, upper_bound: int, budget: Optional[int] = DEFAULT_BUDGET) -> int:
    """Smallest r admitting a distance-two r-colouring, searching upward from max degree + 1."""
    delta = max(g.degrees, default=0)
    if upper_bound < delta + 1:
        raise ValueError(f"upper bound {upper_bound} below max degree + 1 = {delta + 1}")
    for r in range(delta + 1, upper_bound + 1):
        c, stats = solve(g, r, budget)
        if c is not None:
            return r
        if stats.wall_budget_exceeded:
            raise BudgetExceeded(f"r={r}: more than {budget} nodes")
    raise ValueError(f"no distance-two colouring with at most {upper_bound} colours")


def propagate_forced(g: PlaneMultigraph, r: int, partial: Mapping[int, int]) -> dict[int, int]:
    """Extend ``partial`` by colours that are locally forced.

    Two rules, applied until nothing changes: a vertex with one admissible
    colour takes it; and when a vertex has degree r - 1 its closed
    neighbourhood must show every colour exactly once, so a colour admissible
    at only one vertex of it goes there.  Raises ValueError on a dead end.
    The result may be incomplete.
    """
    adj = [sorted(s) for s in square_adjacency(g)]
    closed = [[v] + [g.head(d) for d in g.rotation[v]] for v in range(g.vertex_count) if g.degree(v) == r - 1]
    color = dict(partial)
    full = set(range(1, r + 1))

    def domain(v):
        return full - {color[w] for w in adj[v] if w in color}

    changed = True
    while changed:
        changed = False
        for v in range(g.vertex_count):
            if v in color:
                continue
            dom = domain(v)
            if not dom:
                raise ValueError(f"vertex {v} has no admissible colour")
            if len(dom) == 1:
                color[v] = dom.pop()
                changed = True
        for group in closed:
            present = {color[x] for x in group if x in color}
            for c in full - present:
                spots = [x for x in group if x not in color and c in domain(x)]
                if not spots:
                    raise ValueError(f"colour {c} cannot appear around vertex {group[0]}")
                if len(spots) == 1:
                    color[spots[0]] = c
                    changed = True
    return color
