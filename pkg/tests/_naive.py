"""Brute-force reference implementations used only as test oracles.

Everything here favors obviousness over speed and deliberately shares no
code with the production paths it checks.
"""

from __future__ import annotations

import itertools


def naive_dcore(g, k, l):
    """Repeated full-scan deletion until no vertex violates (k, l)."""
    alive = set(range(g.n))
    while True:
        indeg = {v: sum(1 for u in g.in_adj[v] if u in alive) for v in alive}
        outdeg = {v: sum(1 for u in g.out_adj[v] if u in alive) for v in alive}
        bad = {v for v in alive if indeg[v] < k or outdeg[v] < l}
        if not bad:
            return alive
        alive -= bad


def naive_anchored_rows(g):
    """Anchored table from direct (k, l)-core membership sweeps."""
    rows = [[] for _ in range(g.n)]
    k = 0
    while True:
        core = naive_dcore(g, k, 0)
        if not core:
            break
        remaining = set(core)
        l = 0
        lmax = {}
        while remaining:
            nxt = naive_dcore(g, k, l + 1)
            for v in remaining - nxt:
                lmax[v] = l
            remaining &= nxt
            l += 1
        for v in core:
            rows[v].append(lmax[v])
        k += 1
    return rows


def naive_skyline(pairs):
    """Non-dominated distinct pairs by pairwise comparison, k-ascending."""
    uniq = set(pairs)
    keep = [
        (k, l)
        for (k, l) in uniq
        if not any(k2 >= k and l2 >= l and (k2, l2) != (k, l) for (k2, l2) in uniq)
    ]
    return sorted(keep)


def naive_h_index(values):
    vals = list(values)
    h = 0
    while sum(1 for x in vals if x >= h + 1) >= h + 1:
        h += 1
    return h


def _qualifies(r_in, r_out, k, l):
    n_in = sum(1 for a, b in r_in if a >= k and b >= l)
    n_out = sum(1 for a, b in r_out if a >= k and b >= l)
    return n_in >= k and n_out >= l


def naive_d_index(r_in, r_out):
    """Full enumeration over the candidate grid plus a maximality filter."""
    r_in, r_out = list(r_in), list(r_out)
    good = [
        (k, l)
        for k in range(len(r_in) + 1)
        for l in range(len(r_out) + 1)
        if _qualifies(r_in, r_out, k, l)
    ]
    return naive_skyline(good)


def naive_d_index_over_sets(in_sets, out_sets):
    """Union of d_index over every one-pair-per-neighbor combination."""
    collected = set()
    in_choices = list(itertools.product(*in_sets)) or [()]
    out_choices = list(itertools.product(*out_sets)) or [()]
    for rin in in_choices:
        for rout in out_choices:
            collected.update(naive_d_index(rin, rout))
    return naive_skyline(collected)


def set_dominated_by(r2, r1):
    """True when every pair of r2 is weakly dominated by some pair of r1."""
    return all(any(k <= k1 and l <= l1 for (k1, l1) in r1) for (k, l) in r2)
