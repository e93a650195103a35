"""Immutable simple-graph representation with serialization and connectivity queries.

Vertices are dense 0-based indices.  Graphs are validated on construction and
never mutated afterwards, so a single Graph instance can be shared freely
across worker threads.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .errors import (
    BadCharacterError,
    DuplicateEdgeError,
    EmptyGraphError,
    MalformedEdgeListError,
    MalformedHeaderError,
    SelfLoopError,
    TooFewVerticesError,
    TooLargeError,
    TrailingDataError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    The adjacency structure is a tuple of frozensets, one per vertex.
    Construction validates symmetry, index ranges, and the no-self-loop rule,
    so any Graph in circulation satisfies the full invariant set.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise EmptyGraphError("graph must have at least one vertex")
        if len(self.adjacency) != self.n:
            raise VertexOutOfRangeError(
                f"adjacency has {len(self.adjacency)} entries for n={self.n}"
            )
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise VertexOutOfRangeError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise SelfLoopError(f"self-loop at vertex {u}")
                if u not in self.adjacency[v]:
                    raise VertexOutOfRangeError(
                        f"asymmetric adjacency: {v} in adj({u}) but not conversely"
                    )

    @functools.cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @functools.cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v
        )

    @functools.cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex neighborhood as an int bitmask (bit v set iff v adjacent)."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class DegreeSummary:
    delta_min: int
    delta_max: int
    degree_sequence: tuple[int, ...] = field(default=())


def build_graph(n: int, edges) -> Graph:
    """Build a validated Graph from a vertex count and unordered edge pairs."""
    if n < 1:
        raise EmptyGraphError("graph must have at least one vertex")
    adj: list[set[int]] = [set() for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def degrees(g: Graph) -> DegreeSummary:
    """Minimum degree, maximum degree, and the sorted degree sequence."""
    seq = tuple(sorted(len(nbrs) for nbrs in g.adjacency))
    return DegreeSummary(delta_min=seq[0], delta_max=seq[-1], degree_sequence=seq)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def _connected_after_removal(g: Graph, removed: frozenset[int]) -> bool:
    remaining = [v for v in range(g.n) if v not in removed]
    if not remaining:
        return False
    seen = {remaining[0]}
    stack = [remaining[0]]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in removed and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(remaining)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff no vertex subset of size < k disconnects g (requires n > k).

    Checks removal of every subset of size exactly k-1, which suffices: a
    disconnecting set of size s < k-1 extends to one of size k-1 because
    n > k leaves enough vertices to pad with.
    """
    if k < 1:
        raise TooFewVerticesError("k must be a positive integer")
    if g.n <= k:
        raise TooFewVerticesError(f"n={g.n} must exceed k={k}")
    if not is_connected(g):
        return False
    for subset in itertools.combinations(range(g.n), k - 1):
        if not _connected_after_removal(g, frozenset(subset)):
            return False
    return True


# --- graph6 codec ------------------------------------------------------------
#
# Short form only: header chr(63+n) for n <= 62, then the upper triangle of
# the adjacency matrix read column by column (x[0,1], x[0,2], x[1,2], ...),
# packed 6 bits per character MSB first, each 6-bit group offset by 63.
# Unused padding bits must be zero.


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string into a Graph."""
    if not text:
        raise MalformedHeaderError("empty graph6 string")
    data = text.rstrip("\n")
    if not data:
        raise MalformedHeaderError("graph6 string holds only a newline")
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise BadCharacterError(f"byte {ord(ch)} outside graph6 range 63..126")
    header = ord(data[0]) - 63
    if header == 63:
        raise MalformedHeaderError("long-form graph6 headers are not supported")
    n = header
    if n < 1:
        raise MalformedHeaderError("graph6 header encodes an empty graph")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nchars:
        raise MalformedHeaderError(
            f"graph6 body too short: need {nchars} chars, got {len(body)}"
        )
    if len(body) > nchars:
        raise TrailingDataError(f"{len(body) - nchars} extra characters after adjacency bits")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    if any(bits[nbits:]):
        raise TrailingDataError("nonzero padding bits")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return build_graph(n, edges)


def serialize_graph6(g: Graph) -> str:
    """Encode a Graph as a short-form graph6 string (n <= 62)."""
    if g.n > 62:
        raise TooLargeError(f"graph6 short form caps n at 62, got {g.n}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if v in g.adjacency[u] else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


# --- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: 'n m' header then m lines 'u v'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedEdgeListError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedEdgeListError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedEdgeListError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MalformedEdgeListError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedEdgeListError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedEdgeListError(f"non-integer edge line {ln!r}") from exc
    return build_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
