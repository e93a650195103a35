"""Brute-force computation of the k-forcing number F_k.

Subsets are enumerated size by size in lexicographic order; the first success
is therefore the lexicographically first minimum k-forcing set.  The size-s
space may be split into per-first-element chunks and scanned by a thread
pool, but a chunk's success only commits after every earlier chunk finishes,
so the witness (and the reported subset count) never depend on worker count.

The budget is granted size-granularly: size s is only entered if finishing
it completely would stay within budget.  A BudgetExceeded therefore always
certifies "no k-forcing set of size <= s0" for the last completed size s0.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceededError, EmptyGraphError, KForcingError
from .forcing import closure_mask
from .graph import Graph

DEFAULT_BUDGET = 10**8

PARALLEL_THRESHOLD = 5000


def worker_count() -> int:
    """Worker pool size: KFORCING_WORKERS if set, else available parallelism."""
    raw = os.environ.get("KFORCING_WORKERS")
    if raw:
        try:
            count = int(raw)
        except ValueError:
            raise KForcingError(f"KFORCING_WORKERS must be an integer, got {raw!r}")
        if count < 1:
            raise KForcingError(f"KFORCING_WORKERS must be >= 1, got {count}")
        return count
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ExactResult:
    f_k: int
    witness: tuple[int, ...]
    subsets_tested: int
    elapsed: float


def _combination_rank(combo: tuple[int, ...], n: int) -> int:
    """0-based position of combo in the lexicographic list of its size class."""
    rank = 0
    prev = -1
    s = len(combo)
    for i, c in enumerate(combo):
        for x in range(prev + 1, c):
            rank += math.comb(n - 1 - x, s - 1 - i)
        prev = c
    return rank


def _scan_chunk(g: Graph, k: int, first: int, size: int) -> tuple[int, ...] | None:
    """First success among size-s subsets whose minimum element is `first`."""
    full = (1 << g.n) - 1
    base = 1 << first
    if size == 1:
        return (first,) if closure_mask(g, base, k) == full else None
    for rest in itertools.combinations(range(first + 1, g.n), size - 1):
        mask = base
        for v in rest:
            mask |= 1 << v
        if closure_mask(g, mask, k) == full:
            return (first,) + rest
    return None


def _search_size(g: Graph, k: int, size: int, workers: int) -> tuple[int, ...] | None:
    """Lexicographically first k-forcing set of exactly this size, if any."""
    firsts = list(range(g.n - size + 1))
    if workers <= 1 or math.comb(g.n, size) < PARALLEL_THRESHOLD:
        for first in firsts:
            hit = _scan_chunk(g, k, first, size)
            if hit is not None:
                return hit
        return None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for wave_start in range(0, len(firsts), workers):
            wave = firsts[wave_start : wave_start + workers]
            futures = [pool.submit(_scan_chunk, g, k, f, size) for f in wave]
            for fut in futures:
                hit = fut.result()
                if hit is not None:
                    return hit
    return None


def exact_f_k(
    g: Graph,
    k: int,
    budget: int | None = None,
    workers: int | None = None,
) -> ExactResult:
    """Minimum k-forcing set by exhaustive search, smallest sizes first."""
    if g.n < 1:
        raise EmptyGraphError("graph must have at least one vertex")
    if k < 1:
        raise KForcingError(f"k must be a positive integer, got {k}")
    if budget is None:
        budget = DEFAULT_BUDGET
    if workers is None:
        workers = worker_count()
    start = time.perf_counter()
    tested = 0
    for size in range(1, g.n + 1):
        layer = math.comb(g.n, size)
        if tested + layer > budget:
            raise BudgetExceededError(
                f"budget {budget} reached before completing size {size}; "
                f"no k-forcing set of size <= {size - 1}",
                no_set_of_size_le=size - 1,
                subsets_tested=tested,
            )
        hit = _search_size(g, k, size, workers)
        if hit is not None:
            tested += _combination_rank(hit, g.n) + 1
            return ExactResult(
                f_k=size,
                witness=hit,
                subsets_tested=tested,
                elapsed=time.perf_counter() - start,
            )
        tested += layer
    raise KForcingError("unreachable: the full vertex set always forces itself")


def exact_all_minimum_sets(
    g: Graph,
    k: int,
    budget: int | None = None,
    workers: int | None = None,
) -> list[tuple[int, ...]]:
    """Every minimum k-forcing set, in lexicographic order."""
    if budget is None:
        budget = DEFAULT_BUDGET
    base = exact_f_k(g, k, budget=budget, workers=workers)
    size = base.f_k
    layer = math.comb(g.n, size)
    prior = sum(math.comb(g.n, s) for s in range(1, size))
    if prior + layer > budget:
        raise BudgetExceededError(
            f"budget {budget} too small to enumerate all size-{size} subsets",
            no_set_of_size_le=size - 1,
            subsets_tested=base.subsets_tested,
        )
    full = (1 << g.n) - 1
    out = []
    for combo in itertools.combinations(range(g.n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if closure_mask(g, mask, k) == full:
            out.append(combo)
    return out
