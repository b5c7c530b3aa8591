"""Exact monochromatic subgraph censuses on two-colored complete graphs.

Counts are computed by ordered neighbor-set intersection on the
bit-packed adjacency rows: an edge i<j contributes one triangle per set
bit of rows[i] & rows[j] above j, and K4/K5 extend the same scheme one
and two intersections deeper. This equals the Trace(A^3)/6 definition
(cross-checked against literal matrix powers in the tests) but runs on
hundreds of vertices in seconds.

Everything here is a pure function of an immutable coloring; counts are
exact integers and fractions are exact rationals.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .coloring import Color, TwoColoring, iter_bits
from .errors import InputError, UndefinedDensityError, UnsupportedOrderError


@dataclass(frozen=True)
class TriangleCensus:
    """Exact triangle counts by color on one coloring."""

    n: int
    total: int
    red_triangles: int
    blue_triangles: int

    @property
    def mono(self) -> int:
        return self.red_triangles + self.blue_triangles

    @property
    def mono_fraction(self) -> Fraction:
        """Monochromatic share of all C(n,3) triangles.

        Defined as 1 for n < 3: a graph with no triangles is vacuously
        monochromatic, matching the all-red/all-blue sweep extremes.
        """
        if self.total == 0:
            return Fraction(1)
        return Fraction(self.mono, self.total)


@dataclass(frozen=True)
class CliqueCensus:
    """Exact monochromatic K_m counts, m in {3, 4, 5}."""

    n: int
    m: int
    total: int
    red_count: int
    blue_count: int

    @property
    def mono(self) -> int:
        return self.red_count + self.blue_count

    @property
    def mono_fraction(self) -> Fraction:
        if self.total == 0:
            return Fraction(1)
        return Fraction(self.mono, self.total)


@dataclass(frozen=True)
class TransitivityReport:
    """Monochromatic length-2 paths and the share that close up.

    mono_paths2 counts paths i-j-k whose two edges share a color;
    completion_ratio is the fraction of those whose closing edge ik has
    that same color. Both follow from the triangle census alone: every
    triple contributes one such path if it is bichromatic and three if
    it is monochromatic, so mono_paths2 = C(n,3) + 2f and the ratio is
    3f / (C(n,3) + 2f) where f is the monochromatic triangle count.
    """

    n: int
    mono: int
    mono_paths2: int
    completion_ratio: Fraction


@dataclass(frozen=True)
class MaxCliqueResult:
    """Largest single-color clique found by branch and bound.

    When the node budget runs out before the search closes, size is
    only a lower bound and is_lower_bound is set. witness is the
    lexicographically smallest maximum clique (by sorted vertex tuple)
    whenever the search completed.
    """

    size: int
    witness: tuple[int, ...]
    is_lower_bound: bool
    nodes_explored: int


def _count_range(rows: tuple[int, ...], m: int, lo: int, hi: int) -> int:
    """m-cliques in the bit-row graph whose least vertex lies in [lo, hi)."""

    def rec(cand: int, need: int) -> int:
        # cand holds vertices all above the clique built so far
        if need == 2:
            acc = 0
            c = cand
            while c:
                b = c & -c
                c ^= b
                acc += (c & rows[b.bit_length() - 1]).bit_count()
            return acc
        acc = 0
        c = cand
        while c:
            b = c & -c
            c ^= b
            sub = c & rows[b.bit_length() - 1]
            if sub:
                acc += rec(sub, need - 1)
        return acc

    total = 0
    for v in range(lo, hi):
        cand = rows[v] & (-1 << (v + 1))
        if m == 2:
            total += cand.bit_count()
        elif cand:
            total += rec(cand, m - 1)
    return total


def _count_cliques(rows: tuple[int, ...], m: int, threads: int = 1) -> int:
    n = len(rows)
    if threads <= 1 or n < 2 * threads:
        return _count_range(rows, m, 0, n)
    cuts = [i * n // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda span: _count_range(rows, m, span[0], span[1]),
            zip(cuts, cuts[1:]),
        )
        return sum(parts)


def triangle_census(coloring: TwoColoring, threads: int = 1) -> TriangleCensus:
    """Count red and blue triangles exactly.

    The intersection loop is split over the outer vertex index when
    threads > 1; the reduction is an integer sum, so results are
    identical for any thread count.
    """
    return TriangleCensus(
        n=coloring.n,
        total=comb(coloring.n, 3),
        red_triangles=_count_cliques(coloring.rows(Color.RED), 3, threads),
        blue_triangles=_count_cliques(coloring.rows(Color.BLUE), 3, threads),
    )


def clique_census(coloring: TwoColoring, m: int, threads: int = 1) -> CliqueCensus:
    """Count monochromatic K_m exactly for m in {3, 4, 5}.

    Orders above 5 are out of scope: no exact forced minima are known
    there, so a census would have no floor to compare against.
    """
    if m not in (3, 4, 5):
        raise UnsupportedOrderError(f"clique order must be 3, 4, or 5, got {m}")
    if coloring.n < m:
        raise InputError(f"need at least {m} vertices, got {coloring.n}")
    return CliqueCensus(
        n=coloring.n,
        m=m,
        total=comb(coloring.n, m),
        red_count=_count_cliques(coloring.rows(Color.RED), m, threads),
        blue_count=_count_cliques(coloring.rows(Color.BLUE), m, threads),
    )


def per_vertex_triangles(coloring: TwoColoring, color: Color) -> list[int]:
    """Triangles of the given color through each vertex.

    Entry v equals half the v-th diagonal entry of the cubed adjacency
    matrix; the sum over vertices is three times the triangle count.
    """
    rows = coloring.rows(color)
    out = []
    for v in range(coloring.n):
        nv = rows[v]
        edges_among = 0
        c = nv
        while c:
            b = c & -c
            c ^= b
            edges_among += (c & rows[b.bit_length() - 1]).bit_count()
        out.append(edges_among)
    return out


def transitivity_from_census(census: TriangleCensus) -> TransitivityReport:
    """Path-completion ratio derived from an existing triangle census."""
    if census.n < 3:
        raise InputError(f"transitivity needs n >= 3, got {census.n}")
    f = census.mono
    paths = comb(census.n, 3) + 2 * f
    return TransitivityReport(
        n=census.n,
        mono=f,
        mono_paths2=paths,
        completion_ratio=Fraction(3 * f, paths),
    )


def transitivity(coloring: TwoColoring) -> TransitivityReport:
    """Closed-form path-completion ratio from the triangle census.

    No path enumeration happens here; the counting identity ties the
    number of monochromatic length-2 paths to the triangle count.
    """
    if coloring.n < 3:
        raise InputError(f"transitivity needs n >= 3, got {coloring.n}")
    return transitivity_from_census(triangle_census(coloring))


class _BudgetExceeded(Exception):
    pass


class _CliqueSearch:
    """Branch and bound maximum clique with a greedy coloring bound."""

    def __init__(self, rows: tuple[int, ...], budget: int):
        self.rows = rows
        self.budget = budget
        self.nodes = 0
        self.best_size = 0
        self.best: tuple[int, ...] = ()
        self._stack: list[int] = []

    def _color_order(self, cand: int) -> list[tuple[int, int]]:
        """Greedy-color cand; returns (slot, vertex) sorted by slot.

        slot + 1 bounds the largest clique a vertex can start inside
        cand, so processing high slots first gives the usual prune.
        """
        classes: list[int] = []
        order: list[tuple[int, int]] = []
        c = cand
        while c:
            b = c & -c
            c ^= b
            v = b.bit_length() - 1
            nv = self.rows[v]
            for i, mask in enumerate(classes):
                if not mask & nv:
                    classes[i] |= b
                    order.append((i, v))
                    break
            else:
                classes.append(b)
                order.append((len(classes) - 1, v))
        order.sort()
        return order

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded

    def expand(self, cand: int) -> None:
        self._tick()
        if not cand:
            if len(self._stack) > self.best_size:
                self.best_size = len(self._stack)
                self.best = tuple(sorted(self._stack))
            return
        rem = cand
        order = self._color_order(cand)
        for slot, v in reversed(order):
            if len(self._stack) + slot + 1 <= self.best_size:
                return
            self._stack.append(v)
            self.expand(rem & self.rows[v])
            self._stack.pop()
            rem ^= 1 << v

    def has_clique(self, cand: int, need: int) -> bool:
        """Decision query: does cand contain a clique of size need?"""
        if need <= 0:
            return True
        self._tick()
        if cand.bit_count() < need:
            return False
        if need == 1:
            return True
        order = self._color_order(cand)
        if order[-1][0] + 1 < need:
            return False
        rem = cand
        for slot, v in reversed(order):
            if slot + 1 < need:
                return False
            if self.has_clique(rem & self.rows[v], need - 1):
                return True
            rem ^= 1 << v
        return False


def max_clique(
    coloring: TwoColoring, color: Color, node_budget: int = 10**8
) -> MaxCliqueResult:
    """Exact maximum clique in one color.

    The red maximum clique doubles as the maximum independent set of
    the blue graph. Among equal-size maxima the lexicographically
    smallest witness is returned, found by re-querying the search with
    each candidate vertex pinned in turn; if the initial search blows
    the node budget the best clique found so far is returned with
    is_lower_bound set (and if only the tie-break phase runs out, the
    size is still exact but the witness may not be the smallest).
    """
    rows = coloring.rows(color)
    full = (1 << coloring.n) - 1
    search = _CliqueSearch(rows, node_budget)
    try:
        search.expand(full)
    except _BudgetExceeded:
        return MaxCliqueResult(
            size=search.best_size,
            witness=search.best,
            is_lower_bound=True,
            nodes_explored=search.nodes,
        )

    size = search.best_size
    witness = search.best
    refine = _CliqueSearch(rows, node_budget)
    try:
        chosen: list[int] = []
        cand = full
        need = size
        while need:
            for v in iter_bits(cand):
                rest = cand & rows[v] & (-1 << (v + 1))
                if need == 1 or refine.has_clique(rest, need - 1):
                    chosen.append(v)
                    cand = rest
                    need -= 1
                    break
        witness = tuple(chosen)
    except _BudgetExceeded:
        pass
    return MaxCliqueResult(
        size=size,
        witness=witness,
        is_lower_bound=False,
        nodes_explored=search.nodes + refine.nodes,
    )


def neighborhood_density(coloring: TwoColoring, v: int, color: Color) -> Fraction:
    """Edge density of one color among v's neighbors in that color.

    Undefined (not zero) when v has fewer than two such neighbors,
    since there is no pair to carry an edge.
    """
    if not 0 <= v < coloring.n:
        raise InputError(f"vertex {v} out of range for n={coloring.n}")
    rows = coloring.rows(color)
    nv = rows[v]
    deg = nv.bit_count()
    if deg < 2:
        raise UndefinedDensityError(
            f"vertex {v} has {deg} {color.value} neighbor(s); density needs 2"
        )
    edges_among = 0
    c = nv
    while c:
        b = c & -c
        c ^= b
        edges_among += (c & rows[b.bit_length() - 1]).bit_count()
    return Fraction(edges_among, comb(deg, 2))
