"""Shared fixtures: two reference graphs and dataset discovery.

The two reference graphs have hand-checked decompositions, down to the
per-superstep traces of every algorithm phase; test_peel.py re-derives all
of those expected values from the peeling oracle before the rest of the
suite leans on them.
"""

from __future__ import annotations

import gzip
import os
import sys
import urllib.request
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dcore.graph import DirectedGraph, build_graph

# 8-vertex reference graph, labels 1..8.  Small enough to check by hand,
# rich enough to exercise every phase: heterogeneous kmax (vertex 7 lags),
# zero-out-degree sinks (2, 3), a (2,2)-core {1,4,5,6} the (0,2)-core
# extends by vertex 7, and exactly nine distinct non-empty cores.
REF8_ARCS = [
    (1, 5), (1, 6), (1, 8),
    (4, 1), (4, 2), (4, 3), (4, 5), (4, 8),
    (5, 2), (5, 4), (5, 6),
    (6, 1), (6, 4),
    (7, 1), (7, 6),
    (8, 3), (8, 7),
]

REF8_KMAX = [2, 2, 2, 2, 2, 2, 1, 2]
REF8_INDEG = [3, 2, 2, 2, 2, 3, 1, 2]
REF8_OUTDEG = [3, 0, 0, 5, 3, 2, 2, 2]
REF8_LUPP = [[2, 2, 2], [0, 0, 0], [0, 0, 0], [2, 2, 2],
             [2, 2, 2], [2, 2, 2], [2, 2], [1, 1, 0]]
REF8_LMAX = [[2, 2, 2], [0, 0, 0], [0, 0, 0], [2, 2, 2],
             [2, 2, 2], [2, 2, 2], [2, 1], [1, 1, 0]]
REF8_TIGHT_INIT = [(2, 2), (2, 0), (2, 0), (2, 2), (2, 2), (2, 2), (1, 2), (2, 1)]
REF8_SKYLINE = [[(2, 2)], [(2, 0)], [(2, 0)], [(2, 2)],
                [(2, 2)], [(2, 2)], [(0, 2), (1, 1)], [(1, 1), (2, 0)]]

# 7-vertex reference graph, labels 1..7: a complete digraph on {1,3,5,6}
# plus satellites 2, 4, 7 wired so the whole graph is a (2,2)-core while
# the satellites' skyline sets differ in size and shape.
REF7_ARCS = [
    (1, 3), (1, 5), (1, 6),
    (3, 1), (3, 5), (3, 6),
    (5, 1), (5, 3), (5, 6),
    (6, 1), (6, 3), (6, 5),
    (3, 2), (4, 2), (5, 2), (7, 2),
    (1, 7), (5, 7), (6, 7),
    (2, 1), (2, 4),
    (4, 7),
    (7, 4),
]

REF7_PHI_V2 = [(0, 2), (1, 2), (2, 2), (3, 1)]
REF7_SC = {
    2: [(2, 2), (3, 1)],
    3: [(3, 3)],
    4: [(2, 2)],
    5: [(3, 3)],
    7: [(2, 2), (3, 1)],
}


def _labeled_graph(labeled_arcs, n):
    return build_graph(
        n, [(u - 1, v - 1) for u, v in labeled_arcs], labels=list(range(1, n + 1))
    )


@pytest.fixture(scope="session")
def ref8() -> DirectedGraph:
    return _labeled_graph(REF8_ARCS, 8)


@pytest.fixture(scope="session")
def ref7() -> DirectedGraph:
    return _labeled_graph(REF7_ARCS, 7)


# ---------------------------------------------------------------------------
# Real datasets.  Criteria that depend on them skip when no copy is present
# and the host has no general network access (only package mirrors).

SNAP_FILES = {
    "wiki-vote": ("wiki-Vote.txt", "https://snap.stanford.edu/data/wiki-Vote.txt.gz"),
    "email-euall": ("email-EuAll.txt", "https://snap.stanford.edu/data/email-EuAll.txt.gz"),
}


def _data_dirs():
    dirs = []
    env = os.environ.get("DCORE_DATA")
    if env:
        dirs.append(Path(env))
    dirs.append(Path(__file__).resolve().parent.parent / "data")
    return dirs


def dataset_text(key: str) -> str | None:
    name, url = SNAP_FILES[key]
    for d in _data_dirs():
        for candidate in (d / name, d / (name + ".gz")):
            if candidate.exists():
                if candidate.suffix == ".gz":
                    return gzip.decompress(candidate.read_bytes()).decode("utf-8")
                return candidate.read_text(encoding="utf-8")
    target_dir = _data_dirs()[-1]
    try:
        raw = urllib.request.urlopen(url, timeout=10).read()
        text = gzip.decompress(raw).decode("utf-8")
        target_dir.mkdir(parents=True, exist_ok=True)
        (target_dir / name).write_text(text, encoding="utf-8")
        return text
    except Exception:
        return None


def require_dataset(key: str) -> str:
    text = dataset_text(key)
    if text is None:
        name, url = SNAP_FILES[key]
        pytest.skip(
            f"dataset {name} not found under data/ or $DCORE_DATA and "
            f"{url} is unreachable from this host"
        )
    return text
