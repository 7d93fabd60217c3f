"""Construct the least indeterminate string realizing a feasible array.

The positive edges of the prefix graph are walked in ascending order.  At
each edge the two endpoint letters must come to share a symbol: if they
already do the edge is skipped; otherwise the candidate symbols (those
present at exactly one endpoint, smallest first) are tried against the
forbidden table, and when every candidate is blocked a fresh symbol is
assigned to both endpoints.  Whenever a symbol lands at a position it becomes
forbidden at every negative neighbour of that position, which keeps all
forced mismatches intact.  Positions never touched by a positive edge are
filled last, each with the smallest symbol absent from its negative
neighbourhood.

The result always realizes the array and uses symbols 1..lambda_max densely.
Alphabet size is bounded by n plus the number of fresh symbols the edge walk
introduces; in practice it stays near the minimum (see the oracle tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import IndetString, render_symbol, validate_feasible
from .graph import PrefixGraph, build_prefix_graph

Trace = list[str]


@dataclass
class InferenceState:
    """Mutable working state of one inference run."""

    graph: PrefixGraph
    letters: list[set[int]]  # per position, index 0 unused
    forbidden: list[set[int]]  # per position, symbols banned by neighbours
    lambda_max: int = 0

    @classmethod
    def for_array(cls, y: Sequence[int]) -> "InferenceState":
        g = build_prefix_graph(y)
        return cls(
            graph=g,
            letters=[set() for _ in range(g.n + 1)],
            forbidden=[set() for _ in range(g.n + 1)],
        )


def update_forbidden(
    h: int, sym: int, state: InferenceState, trace: Trace | None = None
) -> None:
    """Ban sym at every negative neighbour of h.  Idempotent."""
    neighbours = state.graph.neg_adj[h]
    for j in neighbours:
        state.forbidden[j].add(sym)
    if trace is not None and neighbours:
        trace.append(
            f"forbid {render_symbol(sym)} at {','.join(map(str, neighbours))}"
        )


def least(i: int, state: InferenceState) -> int:
    """Smallest symbol not present at any negative neighbour of i.

    May be lambda_max + 1; the caller raises lambda_max in that case.
    """
    blocked: set[int] = set()
    for j in state.graph.neg_adj[i]:
        blocked |= state.letters[j]
    sym = 1
    while sym in blocked:
        sym += 1
    return sym


def _run(state: InferenceState, trace: Trace | None) -> IndetString:
    letters = state.letters
    forbidden = state.forbidden
    for i, j in state.graph.pos_edges:
        if trace is not None:
            trace.append(f"edge ({i},{j})")
        if not letters[i].isdisjoint(letters[j]):
            if trace is not None:
                trace.append("skip")
            continue
        candidates = sorted(
            [(s, j) for s in letters[i]] + [(s, i) for s in letters[j]]
        )
        # a symbol on both sides would contradict the disjointness just checked
        assert all(a[0] != b[0] for a, b in zip(candidates, candidates[1:]))
        placed = False
        for sym, h in candidates:
            if sym in forbidden[h]:
                if trace is not None:
                    trace.append(f"reject {render_symbol(sym)} at {h}")
                continue
            letters[h].add(sym)
            if trace is not None:
                trace.append(f"accept {render_symbol(sym)} at {h}")
            update_forbidden(h, sym, state, trace)
            placed = True
            break
        if not placed:
            state.lambda_max += 1
            sym = state.lambda_max
            letters[i].add(sym)
            letters[j].add(sym)
            if trace is not None:
                trace.append(f"new {render_symbol(sym)} at {i},{j}")
            update_forbidden(i, sym, state, trace)
            update_forbidden(j, sym, state, trace)
    for i in range(1, state.graph.n + 1):
        if not letters[i]:
            sym = least(i, state)
            state.lambda_max = max(state.lambda_max, sym)
            letters[i].add(sym)
            if trace is not None:
                trace.append(f"fill {render_symbol(sym)} at {i}")
    return tuple(tuple(sorted(ls)) for ls in letters[1:])


def infer(y: Sequence[int]) -> IndetString:
    """Least indeterminate string whose prefix table is y."""
    state = InferenceState.for_array(validate_feasible(y))
    return _run(state, None)


def infer_with_trace(y: Sequence[int]) -> tuple[IndetString, Trace]:
    """Like infer, also returning the event log (trace format v1).

    One line per event: 'edge (i,j)', 'skip', 'accept s at p', 'reject s at
    p', 'new s at i,j', 'forbid s at p1,p2,...', 'fill s at p'.
    """
    trace: Trace = []
    state = InferenceState.for_array(validate_feasible(y))
    x = _run(state, trace)
    return x, trace
