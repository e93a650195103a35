"""Seedable construction of the graph families used by the verification harness."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GenerationFailedError, InvalidParametersError
from .graph import Graph, build_graph, is_connected
from .rng import SplitMix64

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "circulant",
    "hypercube",
    "petersen",
    "random_regular",
    "gnp_connected",
)

MAX_RETRIES = 10_000


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters; seed only matters for random families."""

    family: str
    parameters: tuple = field(default=())
    seed: int = 0


def _path(n: int) -> Graph:
    if n < 1:
        raise InvalidParametersError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParametersError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParametersError("complete needs n >= 1")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParametersError("complete_bipartite needs both sides >= 1")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def _circulant(n: int, conn: tuple) -> Graph:
    """Circulant graph: i ~ i+s (mod n) for each s in the connection set."""
    if n < 2:
        raise InvalidParametersError("circulant needs n >= 2")
    s_set = sorted(set(int(s) for s in conn))
    if not s_set:
        raise InvalidParametersError("circulant connection set must be nonempty")
    if any(s < 1 or s > n // 2 for s in s_set):
        raise InvalidParametersError(
            f"connection set must lie in 1..{n // 2} for n={n}"
        )
    edges = set()
    for i in range(n):
        for s in s_set:
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return build_graph(n, sorted(edges))


def _hypercube(d: int) -> Graph:
    if d < 1:
        raise InvalidParametersError("hypercube needs dimension >= 1")
    n = 1 << d
    edges = []
    for u in range(n):
        for bit in range(d):
            v = u ^ (1 << bit)
            if u < v:
                edges.append((u, v))
    return build_graph(n, edges)


def _petersen() -> Graph:
    # Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ ((i+2) mod 5)+5), spokes.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def _random_regular(n: int, d: int, seed: int) -> Graph:
    """Configuration model: pair up n*d stubs, reject bad or disconnected draws."""
    if n < 1 or d < 0:
        raise InvalidParametersError("random_regular needs n >= 1 and d >= 0")
    if (n * d) % 2 != 0:
        raise InvalidParametersError(f"n*d must be even, got n={n} d={d}")
    if d >= n:
        raise InvalidParametersError(f"degree d={d} must be < n={n}")
    rng = SplitMix64(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(MAX_RETRIES):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (min(u, v), max(u, v))
            if key in edges:
                ok = False
                break
            edges.add(key)
        if not ok:
            continue
        g = build_graph(n, sorted(edges))
        if d == 0 or is_connected(g):
            return g
    raise GenerationFailedError(
        f"random_regular(n={n}, d={d}, seed={seed}) exhausted {MAX_RETRIES} retries"
    )


def _gnp_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by resampling."""
    if n < 1:
        raise InvalidParametersError("gnp_connected needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise InvalidParametersError(f"edge probability must be in [0,1], got {p}")
    rng = SplitMix64(seed)
    for _ in range(MAX_RETRIES):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    raise GenerationFailedError(
        f"gnp_connected(n={n}, p={p}, seed={seed}) exhausted {MAX_RETRIES} retries"
    )


def generate(spec: FamilySpec) -> Graph:
    """Produce the canonical graph for a FamilySpec, reproducibly from its seed."""
    fam = spec.family
    p = spec.parameters
    try:
        if fam == "path":
            return _path(int(p[0]))
        if fam == "cycle":
            return _cycle(int(p[0]))
        if fam == "complete":
            return _complete(int(p[0]))
        if fam == "complete_bipartite":
            return _complete_bipartite(int(p[0]), int(p[1]))
        if fam == "circulant":
            return _circulant(int(p[0]), tuple(p[1]))
        if fam == "hypercube":
            return _hypercube(int(p[0]))
        if fam == "petersen":
            return _petersen()
        if fam == "random_regular":
            return _random_regular(int(p[0]), int(p[1]), spec.seed)
        if fam == "gnp_connected":
            return _gnp_connected(int(p[0]), float(p[1]), spec.seed)
    except IndexError as exc:
        raise InvalidParametersError(f"missing parameters for family {fam!r}") from exc
    raise InvalidParametersError(f"unknown family {fam!r}")


def is_bipartite(g: Graph) -> bool:
    """2-colorability by BFS layering."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True
