"""Corpus definition and expansion for the verification harness.

A corpus is a finite, fully deterministic list of (graph id, FamilySpec)
pairs plus the k values to sweep and a per-graph solver budget.  The default
corpus bakes in fixed parameters and seeds so repeated runs are identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InvalidParametersError
from .exact import DEFAULT_BUDGET
from .generators import FAMILIES, FamilySpec

SEEDED_FAMILIES = ("random_regular", "gnp_connected")


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    spec: FamilySpec


@dataclass(frozen=True)
class CorpusSpec:
    name: str
    ks: tuple[int, ...]
    budget: int
    entries: tuple[CorpusEntry, ...] = field(default=())


def _fmt_param(p) -> str:
    if isinstance(p, (list, tuple)):
        return "-".join(str(x) for x in p)
    return str(p)


def make_graph_id(spec: FamilySpec) -> str:
    parts = [spec.family] + [_fmt_param(p) for p in spec.parameters]
    if spec.family in SEEDED_FAMILIES:
        parts.append(f"s{spec.seed}")
    return "_".join(parts)


def _entry(family: str, parameters: tuple = (), seed: int = 0) -> CorpusEntry:
    spec = FamilySpec(family=family, parameters=parameters, seed=seed)
    return CorpusEntry(graph_id=make_graph_id(spec), spec=spec)


def default_corpus() -> CorpusSpec:
    """The fixed corpus: classical families at n <= 14 (plus the 4-cube),
    20 seeded random regular graphs, and 20 seeded connected G(n,p) draws."""
    entries: list[CorpusEntry] = []
    for n in (2, 3, 5, 8, 11, 14):
        entries.append(_entry("path", (n,)))
    for n in (3, 4, 5, 6, 8, 11, 14):
        entries.append(_entry("cycle", (n,)))
    for n in (3, 4, 5, 6, 7, 8):
        entries.append(_entry("complete", (n,)))
    for a, b in ((1, 4), (2, 3), (2, 5), (3, 3), (3, 4), (4, 4), (5, 5), (6, 7)):
        entries.append(_entry("complete_bipartite", (a, b)))
    for n, conn in (
        (8, (1, 4)),
        (10, (1, 5)),
        (10, (2, 5)),
        (12, (1, 2)),
        (12, (1, 3)),
        (13, (1, 5)),
        (14, (1, 4)),
        (14, (1, 7)),
    ):
        entries.append(_entry("circulant", (n, conn)))
    entries.append(_entry("hypercube", (3,)))
    entries.append(_entry("hypercube", (4,)))
    entries.append(_entry("petersen"))
    regular_params = (
        (8, 3), (10, 3), (12, 3), (14, 3), (8, 3), (10, 3), (12, 3), (14, 3),
        (8, 4), (9, 4), (10, 4), (11, 4), (12, 4), (13, 4), (14, 4), (10, 4),
        (10, 5), (12, 5), (14, 5), (12, 5),
    )
    for i, (n, d) in enumerate(regular_params):
        entries.append(_entry("random_regular", (n, d), seed=101 + i))
    gnp_params = (
        (8, 0.3), (8, 0.4), (8, 0.5),
        (9, 0.3), (9, 0.4), (9, 0.5),
        (10, 0.3), (10, 0.4), (10, 0.5),
        (11, 0.3), (11, 0.4), (11, 0.5),
        (12, 0.3), (12, 0.4), (12, 0.5),
        (13, 0.3), (13, 0.4),
        (14, 0.3), (14, 0.4), (14, 0.5),
    )
    for i, (n, p) in enumerate(gnp_params):
        entries.append(_entry("gnp_connected", (n, p), seed=201 + i))
    return CorpusSpec(name="default", ks=(1, 2, 3), budget=DEFAULT_BUDGET, entries=tuple(entries))


def circulant_corpus() -> CorpusSpec:
    """15 bipartite circulant graphs for the zero-forcing (k=1) sweep.

    A circulant on an even vertex count with every connection odd is
    bipartite (the parity classes 2-color it).
    """
    params = (
        (6, (1,)),
        (6, (1, 3)),
        (8, (1,)),
        (8, (1, 3)),
        (8, (3,)),
        (10, (1, 3)),
        (10, (1, 5)),
        (10, (3, 5)),
        (12, (1, 3)),
        (12, (1, 5)),
        (12, (3, 5)),
        (12, (1, 3, 5)),
        (14, (1, 3)),
        (14, (1, 5)),
        (14, (3, 5, 7)),
    )
    entries = tuple(_entry("circulant", (n, conn)) for n, conn in params)
    return CorpusSpec(name="circulant", ks=(1,), budget=DEFAULT_BUDGET, entries=entries)


def corpus_from_dict(data: dict) -> CorpusSpec:
    """Parse the JSON corpus format.

    {"name": ..., "ks": [1,2], "budget": 100000000,
     "entries": [{"family": ..., "parameters": [...], "seed": 7}
                 or {"family": ..., "parameters": [...], "seeds": [101, 110]}]}
    """
    try:
        name = str(data.get("name", "custom"))
        ks = tuple(int(k) for k in data["ks"])
        budget = int(data.get("budget", DEFAULT_BUDGET))
        raw_entries = data["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParametersError(f"bad corpus spec: {exc}") from exc
    if not ks or any(k < 1 for k in ks):
        raise InvalidParametersError("corpus ks must be positive integers")
    entries: list[CorpusEntry] = []
    for raw in raw_entries:
        family = raw.get("family")
        if family not in FAMILIES:
            raise InvalidParametersError(f"unknown family {family!r}")
        parameters = _parse_parameters(raw.get("parameters", []))
        if "seeds" in raw:
            lo, hi = int(raw["seeds"][0]), int(raw["seeds"][1])
            if hi < lo:
                raise InvalidParametersError(f"bad seed range {lo}..{hi}")
            for seed in range(lo, hi + 1):
                entries.append(_entry(family, parameters, seed))
        else:
            entries.append(_entry(family, parameters, int(raw.get("seed", 0))))
    return CorpusSpec(name=name, ks=ks, budget=budget, entries=tuple(entries))


def _parse_parameters(raw) -> tuple:
    params = []
    for p in raw:
        if isinstance(p, list):
            params.append(tuple(int(x) for x in p))
        elif isinstance(p, float):
            params.append(p)
        else:
            params.append(int(p))
    return tuple(params)


def load_corpus(path: str) -> CorpusSpec:
    with open(path, encoding="utf-8") as fh:
        return corpus_from_dict(json.load(fh))
