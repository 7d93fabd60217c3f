"""Prefix graphs, regularity, component and edge-label constructions."""

from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given

from conftest import feasible_arrays, s
from indetstr import (
    FeasibleArrayError,
    build_prefix_graph,
    compute_prefix_table,
    edge_label_string,
    enumerate_feasible,
    export_graph,
    is_regular,
    isolated_positive_vertices,
    positive_components,
    regular_string_from_components,
    verify_prefix_table,
)


class TestBuildPrefixGraph:
    def test_golden_small(self):
        g = build_prefix_graph((5, 0, 2, 1, 0))
        assert g.n == 5
        assert g.pos_edges == ((1, 3), (1, 4), (2, 4))
        assert g.neg_edges == ((1, 2), (1, 5), (2, 5), (3, 5))

    def test_golden_larger(self):
        g = build_prefix_graph((8, 2, 0, 1, 4, 0, 1, 1))
        assert g.pos_edges == (
            (1, 2),
            (1, 4),
            (1, 5),
            (1, 7),
            (1, 8),
            (2, 3),
            (2, 6),
            (3, 7),
            (4, 8),
        )
        assert g.neg_edges == ((1, 3), (1, 6), (2, 5), (2, 8), (3, 4))

    def test_all_zero_tail(self):
        g = build_prefix_graph((4, 0, 0, 0))
        assert g.pos_edges == ()
        assert g.neg_edges == ((1, 2), (1, 3), (1, 4))

    def test_all_maximal(self):
        # y = (n, n-1, ..., 1) wires every pair positively and nothing negatively
        g = build_prefix_graph((4, 3, 2, 1))
        assert g.pos_edges == tuple(
            (u, v) for u in range(1, 5) for v in range(u + 1, 5)
        )
        assert g.neg_edges == ()

    def test_empty_and_singleton(self):
        assert build_prefix_graph(()).n == 0
        g = build_prefix_graph((1,))
        assert (g.pos_edges, g.neg_edges) == ((), ())

    def test_neg_adjacency_mirrors_edges(self):
        g = build_prefix_graph((5, 0, 2, 1, 0))
        assert g.neg_adj[1] == (2, 5)
        assert g.neg_adj[2] == (1, 5)
        assert g.neg_adj[3] == (5,)
        assert g.neg_adj[4] == ()
        assert g.neg_adj[5] == (1, 2, 3)

    def test_edge_counts_exhaustive(self):
        for n in range(7):
            for y in enumerate_feasible(n):
                g = build_prefix_graph(y)
                assert len(g.pos_edges) == sum(y[1:])
                assert len(g.neg_edges) == sum(
                    1 for i in range(2, n + 1) if i + y[i - 1] <= n
                )
                assert set(g.pos_edges).isdisjoint(g.neg_edges)
                if n >= 1:
                    assert len(g.pos_edges) + len(g.neg_edges) >= n - 1

    @given(feasible_arrays(min_n=1))
    def test_edge_properties(self, y):
        n = y[0]
        g = build_prefix_graph(y)
        assert len(g.pos_edges) == sum(y[1:])
        assert set(g.pos_edges).isdisjoint(g.neg_edges)
        assert len(g.pos_edges) + len(g.neg_edges) >= n - 1
        for u, v in itertools.chain(g.pos_edges, g.neg_edges):
            assert 1 <= u < v <= n


class TestRegularity:
    def test_golden(self):
        assert is_regular((8, 0, 1, 0, 3, 0, 1, 0))[0]
        assert is_regular((4, 0, 0, 0))[0]
        assert is_regular((4, 3, 2, 1))[0]
        assert not is_regular((5, 0, 2, 1, 0))[0]

    def test_component_labels(self):
        ok, labels = is_regular((8, 0, 1, 0, 3, 0, 1, 0))
        assert ok
        # positions sharing a positive path share the smallest member's label;
        # index 0 of the labeling is unused
        assert labels == (0, 1, 2, 1, 4, 1, 2, 1, 8)

    def test_labels_when_not_regular(self):
        ok, labels = is_regular((5, 0, 2, 1, 0))
        assert not ok
        assert labels == (0, 1, 1, 1, 1, 5)

    def test_rejects_infeasible(self):
        with pytest.raises(FeasibleArrayError):
            is_regular((5, 0, 2, 3, 0))

    def test_trivial(self):
        assert is_regular(()) == (True, (0,))
        assert is_regular((1,)) == (True, (0, 1))

    def test_exhaustive_regular_tables_verify(self):
        # for every regular array up to n = 6 the witness string checks out
        # and is made of singletons only
        for n in range(7):
            for y in enumerate_feasible(n):
                ok, labels = is_regular(y)
                g = build_prefix_graph(y)
                assert labels == positive_components(g)
                if ok:
                    x = regular_string_from_components(g, labels)
                    assert all(len(a) == 1 for a in x)
                    assert compute_prefix_table(x) == y
                else:
                    with pytest.raises(ValueError):
                        regular_string_from_components(g, labels)


class TestRegularWitness:
    def test_golden_strings(self):
        def witness(y):
            g = build_prefix_graph(y)
            return regular_string_from_components(g, positive_components(g))

        assert witness((8, 0, 1, 0, 3, 0, 1, 0)) == s("a b a c a b a d")
        assert witness((4, 0, 0, 0)) == s("a b c d")
        assert witness((4, 3, 2, 1)) == s("a a a a")

    def test_symbols_numbered_by_component_order(self):
        g = build_prefix_graph((6, 0, 2, 0, 0, 1))
        x = regular_string_from_components(g, positive_components(g))
        assert compute_prefix_table(x) == (6, 0, 2, 0, 0, 1)
        # first distinct component seen from the left gets the next symbol
        seen = []
        for (sym,) in x:
            if sym not in seen:
                seen.append(sym)
        assert seen == sorted(seen)


class TestEdgeLabelString:
    def test_golden(self):
        g = build_prefix_graph((5, 0, 2, 1, 0))
        x = edge_label_string(g)
        # one symbol per positive edge, a private one for the isolated vertex
        assert x == ((1, 2), (3,), (1,), (2, 3), (4,))
        assert compute_prefix_table(x) == (5, 0, 2, 1, 0)

    def test_exhaustive_roundtrip(self):
        for n in range(7):
            for y in enumerate_feasible(n):
                x = edge_label_string(build_prefix_graph(y))
                assert compute_prefix_table(x) == y

    @given(feasible_arrays(min_n=1, max_n=14))
    def test_roundtrip_and_symbol_budget(self, y):
        g = build_prefix_graph(y)
        x = edge_label_string(g)
        assert verify_prefix_table(x, y).ok
        syms = {c for a in x for c in a}
        assert syms == set(range(1, len(syms) + 1))
        isolated = sum(1 for a in x if len(a) == 1 and a[0] > len(g.pos_edges))
        assert len(syms) == len(g.pos_edges) + isolated


class TestIsolatedVertices:
    def test_golden(self):
        assert isolated_positive_vertices((5, 0, 2, 1, 0)) == (5,)
        assert isolated_positive_vertices((8, 0, 1, 0, 3, 0, 1, 0)) == (4, 8)
        assert isolated_positive_vertices((4, 0, 0, 0)) == (1, 2, 3, 4)
        assert isolated_positive_vertices((4, 3, 2, 1)) == ()
        assert isolated_positive_vertices((1,)) == (1,)
        assert isolated_positive_vertices(()) == ()

    def test_matches_degree_count_exhaustive(self):
        for n in range(9):
            for y in enumerate_feasible(n):
                got = isolated_positive_vertices(y, verify=True)
                g = build_prefix_graph(y)
                touched = {v for e in g.pos_edges for v in e}
                assert got == tuple(v for v in range(1, n + 1) if v not in touched)

    @given(feasible_arrays(min_n=1, max_n=16))
    def test_verify_mode(self, y):
        isolated_positive_vertices(y, verify=True)


class TestExport:
    def test_json_both(self):
        g = build_prefix_graph((5, 0, 2, 1, 0))
        data = json.loads(export_graph(g, fmt="json"))
        assert data == {
            "n": 5,
            "pos": [[1, 3], [1, 4], [2, 4]],
            "neg": [[1, 2], [1, 5], [2, 5], [3, 5]],
        }

    def test_json_single_sign_omits_other(self):
        g = build_prefix_graph((5, 0, 2, 1, 0))
        assert set(json.loads(export_graph(g, fmt="json", sign="positive"))) == {
            "n",
            "pos",
        }
        assert set(json.loads(export_graph(g, fmt="json", sign="negative"))) == {
            "n",
            "neg",
        }

    def test_dot_golden(self):
        g = build_prefix_graph((3, 0, 0))
        assert export_graph(g, fmt="dot") == (
            "graph prefix_graph {\n"
            "  1;\n"
            "  2;\n"
            "  3;\n"
            "  1 -- 2 [style=dashed];\n"
            "  1 -- 3 [style=dashed];\n"
            "}\n"
        )

    def test_dot_positive_only(self):
        g = build_prefix_graph((3, 2, 1))
        out = export_graph(g, fmt="dot", sign="positive")
        assert "dashed" not in out
        assert "1 -- 2;" in out and "1 -- 3;" in out and "2 -- 3;" in out

    def test_bad_arguments(self):
        g = build_prefix_graph((3, 0, 0))
        with pytest.raises(ValueError):
            export_graph(g, fmt="gml")
        with pytest.raises(ValueError):
            export_graph(g, sign="pos")
