"""Distributed anchored-coreness decomposition in three phases.

Phase I iterates the in-H-index to the in-degree limit kmax(v).  Phase II
iterates, for every k in [0, kmax(v)] at once, the out-H-index restricted to
the vertices with kmax >= k, yielding upper bounds on l_max(v, k).  Phase
III decrements each bound until enough neighbors support it.  Every tracked
scalar only ever decreases, which is what guarantees quiescence.

Messages in phases II/III carry the sender's whole per-k array plus the
list of entries that changed; receivers key their caches by sender, so the
update order within a superstep is irrelevant.
"""

from __future__ import annotations

from .engine import EngineMetrics, VertexProgram, run_program
from .graph import DirectedGraph, PartitionMap
from .kernels import h_index
from .peel import AnchoredTable


class _HState:
    __slots__ = ("value", "nbr", "flag")


class HIndexFixpoint(VertexProgram):
    """Iterated H-index over one neighbor direction.

    consume="in" starts from the in-degree and converges to kmax(v);
    consume="out" is the mirror image and converges to lmax(v).  A vertex
    re-broadcasts only when its value drops, and drops are the only way the
    H-index of a neighbor can fall, so quiescence is a true fixpoint.
    """

    def __init__(self, consume: str = "in"):
        if consume not in ("in", "out"):
            raise ValueError("consume must be 'in' or 'out'")
        self.consume = consume
        self.broadcast = "out" if consume == "in" else "in"

    def _adj(self, v: int, g: DirectedGraph):
        return g.in_adj[v] if self.consume == "in" else g.out_adj[v]

    def init(self, v, g):
        st = _HState()
        adj = self._adj(v, g)
        st.value = len(adj)
        st.nbr = dict.fromkeys(adj, 0)
        st.flag = True
        return st, st.value

    def on_message(self, st, sender, payload):
        st.nbr[sender] = payload
        if payload < st.value:
            st.flag = True

    def after_messages(self, st, v, g):
        if not st.flag:
            return None
        st.flag = False
        h = h_index(st.nbr.values())
        if h < st.value:
            st.value = h
            return h
        return None

    def extract(self, st, v, g):
        return st.value


class _ArrayState:
    __slots__ = ("arr", "nbr", "flags")


class LuppProgram(VertexProgram):
    """Phase II: batched out-H-index iteration inside every G[k] at once.

    The k-th slot of a vertex's array lives in the subgraph induced by
    {u : kmax(u) >= k}; that restriction is applied by ignoring slots beyond
    a neighbor's own array length, so G[k] is never materialized.  Arrays
    start from the full-graph out-degree, a valid upper bound that converges
    to the same fixpoint.
    """

    broadcast = "in"

    def __init__(self, kmaxes: list[int]):
        self.kmaxes = kmaxes

    def init(self, v, g):
        st = _ArrayState()
        width = self.kmaxes[v] + 1
        st.arr = [g.out_degree(v)] * width
        st.nbr = {}
        st.flags = set(range(width))
        return st, (tuple(st.arr), tuple(range(width)))

    def on_message(self, st, sender, payload):
        vals, changed = payload
        st.nbr[sender] = vals
        width = len(st.arr)
        for k in changed:
            if k < width and vals[k] < st.arr[k]:
                st.flags.add(k)

    def after_messages(self, st, v, g):
        if not st.flags:
            return None
        out_adj = g.out_adj[v]
        nbr = st.nbr
        changed = []
        for k in sorted(st.flags):
            vals = []
            for u in out_adj:
                arr = nbr.get(u)
                if arr is not None and k < len(arr):
                    vals.append(arr[k])
            h = h_index(vals)
            if h < st.arr[k]:
                st.arr[k] = h
                changed.append(k)
        st.flags.clear()
        if changed:
            return (tuple(st.arr), tuple(changed))
        return None

    def extract(self, st, v, g):
        return list(st.arr)


class RefineProgram(VertexProgram):
    """Phase III: decrement l_upp(k, v) until both support conditions hold.

    (k, l_upp) survives a round only when at least k in-neighbors and at
    least l_upp out-neighbors report a bound >= l_upp at the same k.  A
    failed check lowers the bound by one and schedules the slot for
    re-examination next round, so chains of decrements advance one step per
    superstep exactly as the refinement protocol prescribes.  Neighbors
    whose own array does not reach k count as zero.
    """

    broadcast = "both"

    def __init__(self, kmaxes: list[int], lupps: list[list[int]]):
        self.kmaxes = kmaxes
        self.lupps = lupps

    def init(self, v, g):
        st = _ArrayState()
        st.arr = list(self.lupps[v])
        st.nbr = {}
        st.flags = set(range(len(st.arr)))
        return st, (tuple(st.arr), tuple(range(len(st.arr))))

    def on_message(self, st, sender, payload):
        vals, changed = payload
        st.nbr[sender] = vals
        width = len(st.arr)
        for k in changed:
            if k < width:
                st.flags.add(k)

    def after_messages(self, st, v, g):
        if not st.flags:
            return None
        nbr = st.nbr
        changed = []
        for k in sorted(st.flags):
            thr = st.arr[k]
            if thr == 0:
                continue
            support_in = 0
            for u in g.in_adj[v]:
                arr = nbr.get(u)
                if arr is not None and k < len(arr) and arr[k] >= thr:
                    support_in += 1
            if support_in < k:
                st.arr[k] = thr - 1
                changed.append(k)
                continue
            support_out = 0
            for u in g.out_adj[v]:
                arr = nbr.get(u)
                if arr is not None and k < len(arr) and arr[k] >= thr:
                    support_out += 1
            if support_out < thr:
                st.arr[k] = thr - 1
                changed.append(k)
        st.flags = set(changed)
        if changed:
            return (tuple(st.arr), tuple(changed))
        return None

    def extract(self, st, v, g):
        return list(st.arr)


def compute_kmax(
    g: DirectedGraph,
    parts: PartitionMap | None = None,
    mode: str = "vertex",
    **kwargs,
) -> tuple[list[int], EngineMetrics]:
    """Per-vertex kmax(v) = max{k : v in the (k, 0)-core}."""
    return run_program(HIndexFixpoint("in"), g, parts, mode, phase="phase I", **kwargs)


def compute_lupp(
    g: DirectedGraph,
    kmaxes: list[int],
    parts: PartitionMap | None = None,
    mode: str = "vertex",
    **kwargs,
) -> tuple[list[list[int]], EngineMetrics]:
    """Per-vertex upper-bound arrays l_upp(k, v) for k in [0, kmax(v)]."""
    return run_program(LuppProgram(kmaxes), g, parts, mode, phase="phase II", **kwargs)


def refine(
    g: DirectedGraph,
    kmaxes: list[int],
    lupps: list[list[int]],
    parts: PartitionMap | None = None,
    mode: str = "vertex",
    **kwargs,
) -> tuple[AnchoredTable, EngineMetrics]:
    """Tighten the upper bounds to the exact anchored corenesses."""
    rows, metrics = run_program(
        RefineProgram(kmaxes, lupps), g, parts, mode, phase="phase III", **kwargs
    )
    return AnchoredTable(rows), metrics


def anchored_decompose(
    g: DirectedGraph,
    parts: PartitionMap | None = None,
    mode: str = "vertex",
    **kwargs,
) -> tuple[AnchoredTable, list[EngineMetrics]]:
    """Run the three phases back to back; equals peel_decompose exactly."""
    kmaxes, m1 = compute_kmax(g, parts, mode, **kwargs)
    lupps, m2 = compute_lupp(g, kmaxes, parts, mode, **kwargs)
    table, m3 = refine(g, kmaxes, lupps, parts, mode, **kwargs)
    return table, [m1, m2, m3]
