"""Deterministic bulk-synchronous superstep simulator.

A vertex program supplies four hooks: init, on_message, after_messages and
extract.  The engine runs them either vertex-centrically (every vertex
updates once per superstep) or block-centrically (each block iterates its
own vertices to a local fixpoint per global superstep, buffering cross-block
messages until the next one).  Execution terminates on the first superstep
in which no vertex emits anything.

Programs must keep on_message commutative over a superstep's message
multiset and broadcast from after_messages only when their value changed;
all programs in this package store latest-per-sender values, which
satisfies both.  Under that contract results and metrics are identical
for any worker count, block count and partitioner.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .graph import DirectedGraph, PartitionMap


class SuperstepLimitError(RuntimeError):
    """A program failed to quiesce within the superstep cap."""


@dataclass
class EngineMetrics:
    """Exact round and message accounting for one engine run."""

    phase: str
    supersteps: int
    messages_total: int
    messages_per_step: list[int]
    intra_messages: int = 0  # block mode: deliveries kept inside a block after init

    def check(self) -> None:
        assert self.messages_total == sum(self.messages_per_step)
        assert self.supersteps == len(self.messages_per_step)


class VertexProgram:
    """Behavior contract executed at every vertex.

    broadcast names the recipients of every emitted payload: the vertex's
    out-neighbors, in-neighbors, or both.
    """

    broadcast = "out"

    def init(self, v: int, g: DirectedGraph):
        """Return (state, initial payload or None)."""
        raise NotImplementedError

    def on_message(self, state, sender: int, payload) -> None:
        raise NotImplementedError

    def after_messages(self, state, v: int, g: DirectedGraph):
        """Return a payload to broadcast, or None when nothing changed."""
        raise NotImplementedError

    def extract(self, state, v: int, g: DirectedGraph):
        raise NotImplementedError


def _recipients(program: VertexProgram, g: DirectedGraph) -> list[list[int]]:
    if program.broadcast == "out":
        return g.out_adj
    if program.broadcast == "in":
        return g.in_adj
    if program.broadcast == "both":
        return [sorted(set(g.in_adj[v]) | set(g.out_adj[v])) for v in range(g.n)]
    raise ValueError(f"bad broadcast direction {program.broadcast!r}")


def default_superstep_cap(g: DirectedGraph) -> int:
    # Degree term covers refinement chains; the +2n term covers information
    # ripples along chains, which need up to diameter-many supersteps however
    # small the degrees are (e.g. a directed path converges one vertex per step).
    return 10 * (g.max_degree() + 1) + 2 * g.n


def _chunks(items: list[int], parts: int) -> list[list[int]]:
    parts = max(1, min(parts, len(items)) if items else 1)
    size = -(-len(items) // parts) if items else 1
    return [items[i : i + size] for i in range(0, len(items), size)] or [[]]


def run_vertex_centric(
    program: VertexProgram,
    g: DirectedGraph,
    parts: PartitionMap | None = None,
    *,
    max_supersteps: int | None = None,
    workers: int = 1,
    observer=None,
    phase: str = "",
):
    """Run to quiescence, one update per vertex per superstep.

    `parts` is accepted for interface parity and ignored: vertex-centric
    semantics (results and metrics) do not depend on the partition.
    """
    del parts
    cap = max_supersteps if max_supersteps is not None else default_superstep_cap(g)
    recipients = _recipients(program, g)
    states = [None] * g.n
    emissions: list[tuple[int, object]] = []
    for v in range(g.n):
        states[v], payload = program.init(v, g)
        if payload is not None:
            emissions.append((v, payload))
    per_step = [sum(len(recipients[v]) for v, _ in emissions)]
    if observer is not None:
        observer(1, states)
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while emissions:
            if len(per_step) >= cap:
                raise SuperstepLimitError(
                    f"no quiescence within {cap} supersteps (phase {phase or '?'})"
                )
            inbox: dict[int, list[tuple[int, object]]] = {}
            for v, payload in emissions:
                for r in recipients[v]:
                    inbox.setdefault(r, []).append((v, payload))

            def run_range(vs):
                out = []
                for v in vs:
                    for s, p in inbox.get(v, ()):
                        program.on_message(states[v], s, p)
                    payload = program.after_messages(states[v], v, g)
                    if payload is not None:
                        out.append((v, payload))
                return out

            if pool is None:
                emissions = run_range(range(g.n))
            else:
                emissions = []
                for part in pool.map(run_range, _chunks(list(range(g.n)), workers)):
                    emissions.extend(part)
            per_step.append(sum(len(recipients[v]) for v, _ in emissions))
            if observer is not None:
                observer(len(per_step), states)
    finally:
        if pool is not None:
            pool.shutdown()
    results = [program.extract(states[v], v, g) for v in range(g.n)]
    metrics = EngineMetrics(
        phase=phase,
        supersteps=len(per_step),
        messages_total=sum(per_step),
        messages_per_step=per_step,
    )
    return results, metrics


def run_block_centric(
    program: VertexProgram,
    g: DirectedGraph,
    parts: PartitionMap,
    *,
    max_supersteps: int | None = None,
    workers: int = 1,
    observer=None,
    phase: str = "",
):
    """Run with per-block local fixpoints between global supersteps.

    Within a global superstep each block repeatedly delivers the messages
    addressed to its own vertices and re-runs after_messages until nothing
    more is emitted locally; messages crossing block boundaries wait for the
    next global superstep.  Extracted results match run_vertex_centric.
    The per-step message counts cover the initial broadcast plus cross-block
    traffic only; intra-block deliveries after init are reported separately.
    """
    cap = max_supersteps if max_supersteps is not None else default_superstep_cap(g)
    recipients = _recipients(program, g)
    block_of = parts.block_of
    n_blocks = parts.n_blocks
    members: list[list[int]] = [[] for _ in range(n_blocks)]
    for v in range(g.n):
        members[block_of[v]].append(v)

    states = [None] * g.n
    # pending[b] = messages to deliver to block b at the next global superstep
    pending: list[list[tuple[int, int, object]]] = [[] for _ in range(n_blocks)]
    init_count = 0
    for v in range(g.n):
        states[v], payload = program.init(v, g)
        if payload is not None:
            for r in recipients[v]:
                pending[block_of[r]].append((v, r, payload))
                init_count += 1
    per_step = [init_count]
    intra_total = 0
    emitted_last = init_count
    if observer is not None:
        observer(1, states)

    def run_block(b: int):
        local = pending[b]
        cross: list[tuple[int, int, object]] = []
        intra = 0
        emitted = 0
        rounds = 0
        while True:
            rounds += 1
            if rounds > cap + 1:
                raise SuperstepLimitError(
                    f"block {b}: no local fixpoint within {cap} iterations"
                )
            for s, r, p in local:
                program.on_message(states[r], s, p)
            local = []
            emitted_now = 0
            for v in members[b]:
                payload = program.after_messages(states[v], v, g)
                if payload is None:
                    continue
                for r in recipients[v]:
                    if block_of[r] == b:
                        local.append((v, r, payload))
                        intra += 1
                    else:
                        cross.append((v, r, payload))
                emitted_now += len(recipients[v])
            emitted += emitted_now
            if emitted_now == 0:
                break
        return cross, intra, emitted

    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while emitted_last:
            if len(per_step) >= cap:
                raise SuperstepLimitError(
                    f"no quiescence within {cap} supersteps (phase {phase or '?'})"
                )
            if pool is None:
                outcomes = [run_block(b) for b in range(n_blocks)]
            else:
                outcomes = list(pool.map(run_block, range(n_blocks)))
            next_pending: list[list[tuple[int, int, object]]] = [
                [] for _ in range(n_blocks)
            ]
            cross_count = 0
            emitted_last = 0
            for cross, intra, emitted in outcomes:
                intra_total += intra
                emitted_last += emitted
                for s, r, p in cross:
                    next_pending[block_of[r]].append((s, r, p))
                    cross_count += 1
            pending = next_pending
            per_step.append(cross_count)
            if observer is not None:
                observer(len(per_step), states)
    finally:
        if pool is not None:
            pool.shutdown()
    results = [program.extract(states[v], v, g) for v in range(g.n)]
    metrics = EngineMetrics(
        phase=phase,
        supersteps=len(per_step),
        messages_total=sum(per_step),
        messages_per_step=per_step,
        intra_messages=intra_total,
    )
    return results, metrics


def run_program(
    program: VertexProgram,
    g: DirectedGraph,
    parts: PartitionMap | None,
    mode: str,
    **kwargs,
):
    """Dispatch on execution mode ("vertex" | "block")."""
    if mode == "vertex":
        return run_vertex_centric(program, g, parts, **kwargs)
    if mode == "block":
        if parts is None:
            raise ValueError("block mode requires a partition")
        return run_block_centric(program, g, parts, **kwargs)
    raise ValueError(f"unknown mode {mode!r}")
