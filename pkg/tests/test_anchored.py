"""Anchored-coreness phases against the reference traces and the oracle."""

from dcore.anchored import (
    HIndexFixpoint,
    LuppProgram,
    RefineProgram,
    anchored_decompose,
    compute_kmax,
    compute_lupp,
    refine,
)
from dcore.engine import default_superstep_cap, run_vertex_centric
from dcore.graph import build_graph, generate_random_digraph, make_partition
from dcore.peel import dcore, peel_decompose

from conftest import REF7_PHI_V2, REF8_KMAX, REF8_LMAX, REF8_LUPP


def test_phase1_ref8_trace(ref8):
    kmaxes, metrics = compute_kmax(ref8)
    assert kmaxes == REF8_KMAX
    # one round of changes (vertices 1 and 6 drop from 3) then quiet
    assert metrics.supersteps == 3
    assert metrics.messages_per_step[0] == ref8.num_arcs


def test_phase1_arcless_graph():
    g = build_graph(4, [])
    kmaxes, _ = compute_kmax(g)
    assert kmaxes == [0, 0, 0, 0]


def test_phase1_matches_oracle_core_sweep():
    g = generate_random_digraph(60, 0.1, seed=3)
    kmaxes, _ = compute_kmax(g)
    for k in range(max(kmaxes) + 2):
        members = dcore(g, k, 0)
        assert members == {v for v in range(g.n) if kmaxes[v] >= k}


def test_phase2_ref8_rows(ref8):
    kmaxes, _ = compute_kmax(ref8)
    lupps, _ = compute_lupp(ref8, kmaxes)
    assert lupps == REF8_LUPP
    assert lupps[7] == [1, 1, 0]
    assert lupps[0] == [2, 2, 2]


def test_phase2_upper_bounds_dominate_oracle():
    for seed in (1, 5, 9):
        g = generate_random_digraph(45, 0.15, seed=seed)
        kmaxes, _ = compute_kmax(g)
        lupps, _ = compute_lupp(g, kmaxes)
        table = peel_decompose(g)
        for v in range(g.n):
            assert len(lupps[v]) == table.kmax(v) + 1
            for k, bound in enumerate(lupps[v]):
                assert bound >= table.lmax(v, k), (seed, v, k)


def test_phase3_ref8_rows(ref8):
    kmaxes, _ = compute_kmax(ref8)
    lupps, _ = compute_lupp(ref8, kmaxes)
    table, _ = refine(ref8, kmaxes, lupps)
    assert table.rows == REF8_LMAX
    assert table.rows[6] == [2, 1]   # v7 refined from [2, 2]
    assert table.rows[0] == [2, 2, 2]  # v1 unchanged


def test_refine_equals_oracle_on_random_graphs():
    for seed in range(8):
        g = generate_random_digraph(50 + 10 * seed, 0.9 / (8 + 4 * seed), seed=seed)
        table, _ = anchored_decompose(g)
        assert table.rows == peel_decompose(g).rows, seed


def test_full_decompose_fig_fixtures(ref7, ref8):
    t1, metrics1 = anchored_decompose(ref7)
    assert t1.pairs(1) == REF7_PHI_V2
    t2, metrics2 = anchored_decompose(ref8)
    assert t2.rows == REF8_LMAX
    assert [m.phase for m in metrics2] == ["phase I", "phase II", "phase III"]
    for m in metrics2:
        m.check()


def test_full_decompose_arcless_graph():
    g = build_graph(3, [])
    table, _ = anchored_decompose(g)
    assert table.rows == [[0], [0], [0]]


def test_mode_equivalence_and_rounds_bound(ref8):
    g = generate_random_digraph(70, 0.08, seed=23)
    want = peel_decompose(g).rows
    cap = default_superstep_cap(g)
    for graph, expected in ((g, want), (ref8, REF8_LMAX)):
        vertex_table, vertex_metrics = anchored_decompose(graph, None, "vertex")
        assert vertex_table.rows == expected
        assert sum(m.supersteps for m in vertex_metrics) <= default_superstep_cap(graph)
        for blocks in (1, 2, 4, 8):
            for name in ("hash", "seg"):
                parts = make_partition(name, graph, blocks)
                table, metrics = anchored_decompose(graph, parts, "block")
                assert table.rows == expected, (blocks, name)
                for m_block, m_vertex in zip(metrics, vertex_metrics):
                    assert m_block.supersteps <= m_vertex.supersteps
    assert cap >= 10


def test_monotone_descent_all_phases(ref8):
    g = generate_random_digraph(40, 0.15, seed=31)
    for graph in (ref8, g):
        snaps = []
        prog = HIndexFixpoint("in")
        kmaxes, _ = run_vertex_centric(
            prog,
            graph,
            observer=lambda _, states: snaps.append([s.value for s in states]),
        )
        for before, after in zip(snaps, snaps[1:]):
            assert all(b <= a for a, b in zip(before, after))

        snaps = []
        lupps, _ = run_vertex_centric(
            LuppProgram(kmaxes),
            graph,
            observer=lambda _, states: snaps.append([list(s.arr) for s in states]),
        )
        for before, after in zip(snaps, snaps[1:]):
            for row_a, row_b in zip(before, after):
                assert all(b <= a for a, b in zip(row_a, row_b))

        snaps = []
        run_vertex_centric(
            RefineProgram(kmaxes, lupps),
            graph,
            observer=lambda _, states: snaps.append([list(s.arr) for s in states]),
        )
        for before, after in zip(snaps, snaps[1:]):
            for row_a, row_b in zip(before, after):
                assert all(b <= a for a, b in zip(row_a, row_b))


def test_sandwich_property():
    g = generate_random_digraph(45, 0.12, seed=37)
    kmaxes, _ = compute_kmax(g)
    lupps, _ = compute_lupp(g, kmaxes)
    table = peel_decompose(g)
    for v in range(g.n):
        for k, bound in enumerate(lupps[v]):
            out_deg_in_gk = sum(1 for u in g.out_adj[v] if kmaxes[u] >= k)
            assert table.lmax(v, k) <= bound <= out_deg_in_gk, (v, k)
