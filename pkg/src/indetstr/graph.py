"""Prefix graph of a feasible array.

Every feasible array forces certain position pairs to match (positive edges)
and certain pairs to mismatch (negative edges).  Positive edge sets come in
staircases: entry y[i] contributes (h, i+h-1) for h = 1..y[i]; the negative
edge (1+y[i], i+y[i]) exists exactly when i+y[i] <= n.  Any string realizes
the array iff it matches along every positive edge and mismatches along every
negative edge, which is what both builders below exploit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .core import IndetString, validate_feasible

Edge = tuple[int, int]


@dataclass(frozen=True)
class PrefixGraph:
    """Vertices 1..n; both edge lists ascending by (u, v) with u < v."""

    n: int
    pos_edges: tuple[Edge, ...]
    neg_edges: tuple[Edge, ...]
    neg_adj: tuple[tuple[int, ...], ...]  # index 0 unused


def build_prefix_graph(y: Sequence[int]) -> PrefixGraph:
    n = len(y)
    pos: list[Edge] = []
    neg: list[Edge] = []
    for i in range(2, n + 1):
        v = y[i - 1]
        for h in range(1, v + 1):
            pos.append((h, i + h - 1))
        if i + v <= n:
            neg.append((1 + v, i + v))
    pos.sort()
    neg.sort()
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in neg:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    g = PrefixGraph(n, tuple(pos), tuple(neg), tuple(tuple(l) for l in adj))
    assert set(g.pos_edges).isdisjoint(g.neg_edges)
    return g


class _DisjointSet:
    """Union-find keeping the smallest member of each set as its root."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra


def positive_components(g: PrefixGraph) -> tuple[int, ...]:
    """labels[v] = smallest vertex in v's component of the positive subgraph.

    Indexed by vertex, so index 0 is unused (it stays 0).
    """
    ds = _DisjointSet(g.n)
    for u, v in g.pos_edges:
        ds.union(u, v)
    return tuple(ds.find(v) for v in range(g.n + 1))


def is_regular(y: Sequence[int]) -> tuple[bool, tuple[int, ...]]:
    """Whether some regular string realizes y, plus the component labeling.

    Positive edges force equality of regular letters, so each positive
    component carries one symbol; y is regular exactly when no negative edge
    has both ends in the same component.
    """
    g = build_prefix_graph(validate_feasible(y))
    labels = positive_components(g)
    ok = all(labels[u] != labels[v] for u, v in g.neg_edges)
    return ok, labels


def regular_string_from_components(
    g: PrefixGraph, labels: Sequence[int]
) -> IndetString:
    """Regular witness: one fresh symbol per positive component.

    Components are numbered by smallest member, so the output is
    deterministic.  Raises ValueError when some negative edge stays inside a
    component (no regular witness exists).
    """
    for u, v in g.neg_edges:
        if labels[u] == labels[v]:
            raise ValueError(
                f"array is not regular: positions {u} and {v} must mismatch "
                "but lie in one forced-match component"
            )
    rank: dict[int, int] = {}
    for v in range(1, g.n + 1):
        rank.setdefault(labels[v], len(rank) + 1)
    return tuple((rank[labels[v]],) for v in range(1, g.n + 1))


def edge_label_string(g: PrefixGraph) -> IndetString:
    """Indeterminate witness: each position's letter is the set of its
    incident positive edges, one symbol per edge.

    Two positions share a symbol iff a positive edge joins them, so positive
    pairs match and negative pairs cannot.  Positions with no incident edge
    get a private fresh symbol.  Edge symbols are ranked by the edge's sorted
    position, the private symbols after all edges.
    """
    incident: list[list[int]] = [[] for _ in range(g.n + 1)]
    for r, (u, v) in enumerate(g.pos_edges, start=1):
        incident[u].append(r)
        incident[v].append(r)
    letters: list[tuple[int, ...]] = []
    next_rank = len(g.pos_edges) + 1
    for v in range(1, g.n + 1):
        if incident[v]:
            letters.append(tuple(incident[v]))
        else:
            letters.append((next_rank,))
            next_rank += 1
    return tuple(letters)


def isolated_positive_vertices(
    y: Sequence[int], verify: bool = False
) -> tuple[int, ...]:
    """Positions with no incident positive edge, read off the array directly.

    Position i is isolated iff (a) i = 1 or y[i] = 0, (b) y[j] < i for every
    j in 2..n, and (c) j + y[j] <= i for every j in 2..i-1.  The j = 1 term
    would only ever pair i with itself, so the scan in (c) starts at 2.

    With verify=True the degree-zero vertices of the built graph are computed
    as well and asserted equal.
    """
    y = validate_feasible(y)
    n = len(y)
    iso: list[int] = []
    for i in range(1, n + 1):
        if i != 1 and y[i - 1] != 0:
            continue
        if any(y[j - 1] >= i for j in range(2, n + 1)):
            continue
        if any(j + y[j - 1] > i for j in range(2, i)):
            continue
        iso.append(i)
    result = tuple(iso)
    if verify:
        g = build_prefix_graph(y)
        touched = {v for e in g.pos_edges for v in e}
        by_degree = tuple(v for v in range(1, n + 1) if v not in touched)
        assert result == by_degree, f"{result} != {by_degree} for {y}"
    return result


def export_graph(g: PrefixGraph, fmt: str = "dot", sign: str = "both") -> str:
    """Render the graph as DOT or compact JSON.

    DOT declares every vertex (isolated ones stay visible) and draws negative
    edges dashed.  JSON is {"n": ..., "pos": [[u,v],...], "neg": [[u,v],...]}
    with only the requested sign lists present.
    """
    if sign not in ("positive", "negative", "both"):
        raise ValueError(f"unknown sign {sign!r}")
    want_pos = sign in ("positive", "both")
    want_neg = sign in ("negative", "both")
    if fmt == "json":
        doc: dict = {"n": g.n}
        if want_pos:
            doc["pos"] = [list(e) for e in g.pos_edges]
        if want_neg:
            doc["neg"] = [list(e) for e in g.neg_edges]
        return json.dumps(doc, separators=(",", ":"))
    if fmt == "dot":
        lines = ["graph prefix_graph {"]
        for v in range(1, g.n + 1):
            lines.append(f"  {v};")
        if want_pos:
            for u, v in g.pos_edges:
                lines.append(f"  {u} -- {v};")
        if want_neg:
            for u, v in g.neg_edges:
                lines.append(f"  {u} -- {v} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
