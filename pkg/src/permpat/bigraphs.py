"""Bipartite-graph encodings of words, ordered containment, block
contraction, fiber accounting and the resulting formula bounds.

A word w of length l over {1..n} becomes a graph on ([l],[n]) with one
edge (i, w_i) per position.  Contracting consecutive left-vertex blocks
of sizes m_1..m_n yields a graph on ([n],[right]); an avoiding graph
stays avoiding under contraction when the forbidden pattern is an
ordinary permutation, and each contracted edge over a block of size m
is the image of exactly 2^m - 1 edge sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .errors import BudgetExceeded, ParseError
from .matrices import BinaryMatrix
from .words import MultisetSpec, Word, validate_word


@dataclass(frozen=True)
class BipartiteGraph:
    """Ordered vertex classes [left_size], [right_size] and an edge set."""

    left_size: int
    right_size: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.left_size < 1 or self.right_size < 1:
            raise ValueError("vertex classes must be nonempty")
        for i, j in self.edges:
            if not (1 <= i <= self.left_size and 1 <= j <= self.right_size):
                raise ValueError(f"edge ({i},{j}) out of range")

    @classmethod
    def from_mask(cls, left_size: int, right_size: int, mask: int) -> "BipartiteGraph":
        """Decode a row-major edge bitset: bit (i-1)*right_size + (j-1)."""
        edges = []
        for bit in range(left_size * right_size):
            if mask >> bit & 1:
                i, j = divmod(bit, right_size)
                edges.append((i + 1, j + 1))
        return cls(left_size, right_size, frozenset(edges))

    @classmethod
    def parse(cls, text: str) -> "BipartiteGraph":
        """First line 'a b', then one 'i j' edge per line, 1-indexed."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph text")
        try:
            a, b = (int(x) for x in lines[0].split())
            edges = frozenset((int(i), int(j))
                              for i, j in (ln.split() for ln in lines[1:]))
            return cls(a, b, edges)
        except ValueError as exc:
            raise ParseError(f"bad graph text: {exc}") from None

    def to_mask(self) -> int:
        mask = 0
        for i, j in self.edges:
            mask |= 1 << ((i - 1) * self.right_size + (j - 1))
        return mask

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def to_text(self) -> str:
        lines = [f"{self.left_size} {self.right_size}"]
        lines += [f"{i} {j}" for i, j in self.sorted_edges]
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "left_size": self.left_size,
            "right_size": self.right_size,
            "edges": [list(e) for e in self.sorted_edges],
        }


@dataclass(frozen=True)
class ContractionPlan:
    """Consecutive left-vertex blocks of sizes m_1..m_n: block i covers
    positions m_1+...+m_{i-1}+1 through m_1+...+m_i."""

    spec: MultisetSpec

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def length(self) -> int:
        return self.spec.length

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = []
        start = 1
        for m in self.spec.multiplicities:
            out.append(tuple(range(start, start + m)))
            start += m
        return tuple(out)

    def block_of(self) -> tuple[int, ...]:
        """block_of()[p-1] is the 1-indexed block containing position p."""
        out = []
        for i, m in enumerate(self.spec.multiplicities, start=1):
            out.extend([i] * m)
        return tuple(out)


def graph_of_word(word: Word, spec: MultisetSpec) -> BipartiteGraph:
    """The position/value incidence graph on ([length],[n])."""
    if not validate_word(word, spec):
        raise ValueError(f"{word} is not an arrangement of multiset ({spec})")
    edges = frozenset((i, v) for i, v in enumerate(word.entries, start=1))
    return BipartiteGraph(spec.length, spec.n, edges)


def pattern_graph(pattern: Word) -> BipartiteGraph:
    """graph_of_word over the pattern's own multiset."""
    return graph_of_word(pattern, MultisetSpec.from_word(pattern))


def ordered_contains(P: BipartiteGraph, Q: BipartiteGraph) -> bool:
    """Ordered-subgraph containment.

    Looks for order-preserving injections of Q's left and right classes
    into P's mapping every edge of Q onto an edge of P (extra edges of P
    are irrelevant).  Backtracks over Q's left vertices in order; right
    images are pinned lazily, constrained to windows that leave room for
    the not-yet-pinned right vertices on either side.
    """
    if Q.left_size > P.left_size or Q.right_size > P.right_size:
        return False
    pedges = P.edges
    qn, pn = Q.left_size, P.left_size
    qb, pb = Q.right_size, P.right_size
    neighbors: dict[int, list[int]] = {v: [] for v in range(1, qn + 1)}
    for v, w in Q.edges:
        neighbors[v].append(w)
    for v in neighbors:
        neighbors[v].sort()
    rmap: dict[int, int] = {}

    def window(w: int) -> tuple[int, int]:
        # images already pinned force gaps on both sides of w
        lo, hi = w, pb - (qb - w)
        for other, img in rmap.items():
            if other < w:
                lo = max(lo, img + (w - other))
            else:
                hi = min(hi, img - (other - w))
        return lo, hi

    def place_left(v: int, min_u: int) -> bool:
        if v > qn:
            return True
        for u in range(min_u, pn - (qn - v) + 1):
            if bind(u, neighbors[v], 0, v):
                return True
        return False

    def bind(u: int, nbrs: list[int], idx: int, v: int) -> bool:
        if idx == len(nbrs):
            return place_left(v + 1, u + 1)
        w = nbrs[idx]
        if w in rmap:
            return (u, rmap[w]) in pedges and bind(u, nbrs, idx + 1, v)
        lo, hi = window(w)
        for cand in range(lo, hi + 1):
            if (u, cand) in pedges:
                rmap[w] = cand
                if bind(u, nbrs, idx + 1, v):
                    return True
                del rmap[w]
        return False

    return place_left(1, 1)


def ordered_contains_bruteforce(P: BipartiteGraph, Q: BipartiteGraph) -> bool:
    """Reference check trying every pair of injections; sides <= 4 or so."""
    if Q.left_size > P.left_size or Q.right_size > P.right_size:
        return False
    qedges = Q.sorted_edges
    for f in combinations(range(1, P.left_size + 1), Q.left_size):
        for fp in combinations(range(1, P.right_size + 1), Q.right_size):
            if all((f[v - 1], fp[w - 1]) in P.edges for v, w in qedges):
                return True
    return False


def adjacency(G: BipartiteGraph) -> BinaryMatrix:
    """left_size x right_size 0-1 matrix with 1 exactly at edges."""
    cells = [[0] * G.right_size for _ in range(G.left_size)]
    for i, j in G.edges:
        cells[i - 1][j - 1] = 1
    return BinaryMatrix(tuple(tuple(row) for row in cells))


def contract(G: BipartiteGraph, plan: ContractionPlan) -> BipartiteGraph:
    """Merge each left block to one vertex, keeping an edge (i, j) when any
    block member had an edge to j."""
    if G.left_size != plan.length:
        raise ValueError(
            f"graph has {G.left_size} left vertices, plan covers {plan.length}")
    block_of = plan.block_of()
    edges = frozenset((block_of[i - 1], j) for i, j in G.edges)
    return BipartiteGraph(plan.n, G.right_size, edges)


def fiber_size(Gp: BipartiteGraph, plan: ContractionPlan) -> int:
    """Number of graphs on ([length],[right]) contracting exactly to Gp.

    Each contracted edge (i, j) is the image of any nonempty subset of the
    block-i-to-j edges (2^{m_i} - 1 choices); non-edges force emptiness.
    """
    if Gp.left_size != plan.n:
        raise ValueError(
            f"graph has {Gp.left_size} left vertices, plan contracts to {plan.n}")
    mults = plan.spec.multiplicities
    out = 1
    for i, _ in Gp.edges:
        out *= 2 ** mults[i - 1] - 1
    return out


DEFAULT_CENSUS_CELLS = 20


def _census_range(left_size: int, right_size: int, start: int, stop: int,
                  pattern: Word) -> int:
    gq = pattern_graph(pattern)
    return sum(
        1 for mask in range(start, stop)
        if not ordered_contains(
            BipartiteGraph.from_mask(left_size, right_size, mask), gq))


def census_avoiding_graphs(n: int, m: int, pattern: Word, *, workers: int = 1,
                           max_cells: int = DEFAULT_CENSUS_CELLS) -> int:
    """Count bipartite graphs on ([n*m],[n]) avoiding the pattern's graph,
    by exhausting all 2^(n*m*n) edge subsets.

    With workers > 1 the mask space is split into fixed high-bit ranges;
    the total is an exact sum independent of scheduling.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if not pattern.is_permutation:
        raise ValueError("census pattern must be an ordinary permutation")
    cells = n * m * n
    if cells > max_cells:
        raise BudgetExceeded(
            f"census over 2^{cells} graphs exceeds the guard of 2^{max_cells}")
    a, b = n * m, n
    if workers > 1:
        chunks = min(4 * workers, 1 << cells)
        step = (1 << cells) // chunks
        bounds_list = [(k * step, (k + 1) * step if k < chunks - 1 else 1 << cells)
                       for k in range(chunks)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_census_range,
                             [a] * chunks, [b] * chunks,
                             [lo for lo, _ in bounds_list],
                             [hi for _, hi in bounds_list],
                             [pattern] * chunks)
        return sum(parts)
    return _census_range(a, b, 0, 1 << cells, pattern)


@dataclass(frozen=True)
class Power:
    """An exact value base**exponent whose exponent may be fractional."""

    base: int
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent))

    @property
    def is_exact(self) -> bool:
        return self.exponent.denominator == 1

    @property
    def value(self) -> int | None:
        if not self.is_exact:
            return None
        return self.base ** int(self.exponent)

    def __float__(self) -> float:
        return float(self.base) ** float(self.exponent)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.value)
        return f"{self.base}^({self.exponent})"

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "exponent": str(self.exponent),
            "value": None if self.value is None else str(self.value),
        }


@dataclass(frozen=True)
class BoundRecord:
    """Formula bounds for avoiding-graph counts at a given slope d."""

    n: int
    m: int
    d: Fraction
    klazar_bound: Power
    multiset_bound: Power
    e_q: Power

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": str(self.d),
            "klazar_bound": self.klazar_bound.as_dict(),
            "multiset_bound": self.multiset_bound.as_dict(),
            "e_q": self.e_q.as_dict(),
        }


def bounds(n: int, m: int, d) -> BoundRecord:
    """Evaluate 15^(2dn) for balanced avoiding graphs, ((2^m-1)*15^2)^(dn)
    for the multiset side, and the per-symbol constant (2*15^2)^d = 450^d."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    d = Fraction(d)
    if d < 0:
        raise ValueError("slope d must be >= 0")
    dn = d * n
    return BoundRecord(
        n=n, m=m, d=d,
        klazar_bound=Power(15, 2 * dn),
        multiset_bound=Power((2**m - 1) * 15**2, dn),
        e_q=Power(2 * 15**2, d),
    )
