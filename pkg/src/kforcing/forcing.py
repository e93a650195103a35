"""The k-forcing color-change process.

A colored vertex with at least one and at most k uncolored neighbors forces
all of them.  Rounds are synchronous: every eligible vertex fires against the
state at the start of the round, and all newly forced vertices join at the
round's end.  The rule is monotone, so the fixed point does not depend on
scheduling; only the trace presentation does.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAFixedPointError, VertexOutOfRangeError
from .graph import Graph


@dataclass(frozen=True)
class ColorState:
    """The set of colored vertices at one moment of the process."""

    colored: frozenset[int]

    def __contains__(self, v: int) -> bool:
        return v in self.colored

    def __len__(self) -> int:
        return len(self.colored)


@dataclass(frozen=True)
class ForcingEvent:
    round: int
    forcer: int
    forced: tuple[int, ...]


@dataclass(frozen=True)
class ForcingTrace:
    initial: ColorState
    events: tuple[ForcingEvent, ...]
    final: ColorState
    rounds: int


def _check_vertices(g: Graph, s) -> frozenset[int]:
    vs = frozenset(s)
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(f"vertex {v} out of range for n={g.n}")
    return vs


def closure(g: Graph, s, k: int) -> ForcingTrace:
    """Run the round-synchronous k-forcing process from s to its fixed point."""
    if k < 1:
        raise VertexOutOfRangeError(f"k must be a positive integer, got {k}")
    initial = _check_vertices(g, s)
    masks = g.neighbor_masks
    colored_mask = 0
    for v in initial:
        colored_mask |= 1 << v
    full = (1 << g.n) - 1

    events: list[ForcingEvent] = []
    rounds = 0
    while colored_mask != full:
        rounds += 1
        new_mask = 0
        fired = False
        mask = colored_mask
        while mask:
            v_bit = mask & -mask
            mask ^= v_bit
            v = v_bit.bit_length() - 1
            unc = masks[v] & ~colored_mask
            cnt = unc.bit_count()
            if 1 <= cnt <= k:
                forced = []
                u = unc
                while u:
                    w_bit = u & -u
                    u ^= w_bit
                    forced.append(w_bit.bit_length() - 1)
                events.append(ForcingEvent(round=rounds, forcer=v, forced=tuple(forced)))
                new_mask |= unc
                fired = True
        if not fired:
            rounds -= 1
            break
        colored_mask |= new_mask

    final = frozenset(v for v in range(g.n) if colored_mask >> v & 1)
    return ForcingTrace(
        initial=ColorState(initial),
        events=tuple(events),
        final=ColorState(final),
        rounds=rounds,
    )


def closure_mask(g: Graph, start_mask: int, k: int) -> int:
    """Fixed point of the rule on int bitmasks; agrees with closure().final.

    Trace-free fast path for the exact solver's inner loop.
    """
    masks = g.neighbor_masks
    full = (1 << g.n) - 1
    colored = start_mask
    while colored != full:
        new = 0
        mask = colored
        while mask:
            v_bit = mask & -mask
            mask ^= v_bit
            unc = masks[v_bit.bit_length() - 1] & ~colored
            if unc and unc.bit_count() <= k:
                new |= unc
        if not new:
            break
        colored |= new
    return colored


def is_k_forcing_set(g: Graph, s, k: int) -> bool:
    return len(closure(g, s, k).final.colored) == g.n


def stalled_frontier(g: Graph, state: ColorState, k: int) -> list[tuple[int, int]]:
    """Colored vertices still touching the uncolored region, with their counts.

    Only valid at a fixed point, so every listed vertex has > k uncolored
    neighbors.  Sorted by vertex index.
    """
    colored = _check_vertices(g, state.colored)
    out = []
    for v in sorted(colored):
        unc = sum(1 for w in g.adjacency[v] if w not in colored)
        if unc == 0:
            continue
        if unc <= k:
            raise NotAFixedPointError(
                f"vertex {v} can still force ({unc} uncolored neighbors, k={k})"
            )
        out.append((v, unc))
    return out


def format_trace(trace: ForcingTrace) -> str:
    """Line-oriented rendering: one `round forcer -> forced...` line per event."""
    lines = [f"initial {' '.join(map(str, sorted(trace.initial.colored)))}".rstrip()]
    for ev in trace.events:
        lines.append(f"{ev.round} {ev.forcer} -> {' '.join(map(str, ev.forced))}")
    lines.append(f"final {' '.join(map(str, sorted(trace.final.colored)))}")
    return "\n".join(lines) + "\n"
