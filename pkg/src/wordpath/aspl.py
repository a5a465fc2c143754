"""Average shortest path length: exact, source-sampled, and growth tracking.

ASPL of a graph is the mean of d(i, j) over ordered pairs of distinct nodes,
computed by BFS because edges are unweighted.  Large graphs are estimated
from a uniform sample of BFS source rows; the estimator is unbiased and its
standard error is reported alongside.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels
from ._rng import SplitMix64
from .errors import DisconnectedGraphError
from .events import EventTape
from .graph import Graph

DEFAULT_EXACT_THRESHOLD = 2000
DEFAULT_SAMPLE_SOURCES = 512
DEFAULT_DENSE_UNTIL = 100
DEFAULT_RATIO = 1.05


class CurvePoint(NamedTuple):
    n: int
    length: float
    stderr: float
    realizations: int


@dataclass
class AsplCurve:
    """Sequence of (N, L, stderr, realizations) checkpoints, N increasing."""

    points: list[CurvePoint] = field(default_factory=list)
    mode: str = "exact"

    def __len__(self) -> int:
        return len(self.points)

    def ns(self) -> list[int]:
        return [p.n for p in self.points]

    def lengths(self) -> list[float]:
        return [p.length for p in self.points]

    def at(self, n: int) -> CurvePoint:
        for p in self.points:
            if p.n == n:
                return p
        raise KeyError(f"no checkpoint at N={n}")

    def to_csv(self, fh, header_lines: Iterable[str] = ()) -> None:
        """Fixed 6-decimal formatting so reruns are byte-identical."""
        for line in header_lines:
            fh.write(f"# {line}\n")
        fh.write("N,L,stderr,realizations\n")
        for p in self.points:
            fh.write(f"{p.n},{p.length:.6f},{p.stderr:.6f},{p.realizations}\n")

    @classmethod
    def from_csv(cls, fh, mode: str = "unknown") -> "AsplCurve":
        points = []
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#") or line.startswith("N,"):
                continue
            n_str, l_str, e_str, r_str = line.split(",")
            points.append(CurvePoint(int(n_str), float(l_str), float(e_str), int(r_str)))
        return cls(points=points, mode=mode)


# ---------------------------------------------------------------------------
# Exact / sampled ASPL of a static graph
# ---------------------------------------------------------------------------

def _csr_or_largest_component(g: Graph, policy: str):
    indptr, indices = g.to_csr()
    if policy == "strict":
        return indptr, indices, g.n_nodes
    comp = largest_component_nodes(g)
    if len(comp) == g.n_nodes:
        return indptr, indices, g.n_nodes
    remap = {old: new for new, old in enumerate(comp)}
    sub = Graph()
    for _ in comp:
        sub.add_node()
    for u, v in g.edges():
        if u in remap and v in remap:
            sub.add_edge(remap[u], remap[v])
    indptr, indices = sub.to_csr()
    return indptr, indices, sub.n_nodes


def largest_component_nodes(g: Graph) -> list[int]:
    """Node ids of the largest connected component, in id order."""
    seen = [False] * g.n_nodes
    best: list[int] = []
    for start in range(g.n_nodes):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        if len(comp) > len(best):
            best = comp
    best.sort()
    return best


def aspl_exact(g: Graph, policy: str = "strict") -> float:
    """Exact ASPL via BFS from every node.

    ``policy="strict"`` raises DisconnectedGraphError on a multi-component
    graph; ``policy="largest"`` computes over the largest component instead.
    """
    if g.n_nodes < 2:
        raise ValueError("ASPL needs at least 2 nodes")
    indptr, indices, n = _csr_or_largest_component(g, policy)
    if n < 2:
        raise ValueError("largest component has fewer than 2 nodes")
    sources = np.arange(n, dtype=np.int64)
    rowmeans, ok = kernels.bfs_rowmeans(indptr, indices, sources)
    if not ok:
        raise DisconnectedGraphError("graph is not connected (strict policy)")
    length, _ = kernels.reduce_rowmeans(rowmeans, sampled=False)
    return length


def aspl_sampled(g: Graph, sources: int, seed: int,
                 policy: str = "strict") -> tuple[float, float]:
    """Estimated ASPL from BFS rows of ``sources`` distinct random nodes.

    Degrades to the exact computation (stderr 0) when sources >= N.
    Deterministic for fixed (graph, sources, seed).
    """
    if g.n_nodes < 2:
        raise ValueError("ASPL needs at least 2 nodes")
    if sources < 1:
        raise ValueError("need at least one source")
    indptr, indices, n = _csr_or_largest_component(g, policy)
    if sources >= n:
        src = np.arange(n, dtype=np.int64)
        sampled = False
    else:
        rng = SplitMix64(seed)
        src = np.asarray(rng.sample_indices(n, sources), dtype=np.int64)
        sampled = True
    rowmeans, ok = kernels.bfs_rowmeans(indptr, indices, src)
    if not ok:
        raise DisconnectedGraphError("graph is not connected (strict policy)")
    return kernels.reduce_rowmeans(rowmeans, sampled=sampled)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Full BFS distance matrix (int64, -1 for unreachable); small graphs."""
    n = g.n_nodes
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u]
            for w in g.adj[u]:
                if row[w] < 0:
                    row[w] = du + 1
                    queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# Growth tracking
# ---------------------------------------------------------------------------

def default_schedule(n_max: int, dense_until: int = DEFAULT_DENSE_UNTIL,
                     ratio: float = DEFAULT_RATIO) -> list[int]:
    """Every N up to ``dense_until``, then geometric with the given ratio
    rounded up to the next unused integer."""
    if n_max < 2:
        return []
    out = list(range(2, min(dense_until, n_max) + 1))
    n = out[-1] if out else 2
    while n < n_max:
        n = max(int(np.ceil(n * ratio)), n + 1)
        if n <= n_max:
            out.append(n)
    if out[-1] != n_max:
        out.append(n_max)
    return out


def track_growth(tape: EventTape, schedule,
                 exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
                 sample_sources: int = DEFAULT_SAMPLE_SOURCES,
                 seed: int = 0) -> AsplCurve:
    """Replay a growth tape, measuring ASPL at each scheduled node count.

    Each checkpoint is measured right after the node event that first brings
    the graph to that N.  Exact BFS is used up to ``exact_threshold`` nodes,
    source sampling above.  Checkpoints the stream never reaches are absent.
    """
    schedule = sorted(set(int(n) for n in schedule))
    if schedule and schedule[0] < 2:
        raise ValueError("checkpoints must be >= 2")
    if not schedule:
        return AsplCurve(points=[], mode=_mode_label(exact_threshold, sample_sources))
    checkpoints = np.asarray(schedule, dtype=np.int64)
    slots = tape.rewire_slots() if tape.has_rewires else np.empty(0, dtype=np.int64)
    ns, lengths, errs, modes = kernels.track_aspl(
        tape.kinds, tape.offsets, tape.payload, slots,
        checkpoints, exact_threshold, sample_sources, seed,
    )
    points = [
        CurvePoint(int(n), float(l), float(e), 1)
        for n, l, e in zip(ns, lengths, errs)
    ]
    return AsplCurve(points=points, mode=_mode_label(exact_threshold, sample_sources))


def _mode_label(exact_threshold: int, sample_sources: int) -> str:
    return f"exact<={exact_threshold},sampled({sample_sources})"


def average_curves(curves: list[AsplCurve]) -> AsplCurve:
    """Pointwise mean and standard error of the mean across curves.

    Curves are grouped by checkpoint N; a checkpoint is averaged over the
    curves that reached it.  Single-contributor checkpoints get stderr 0.
    """
    if not curves:
        raise ValueError("average_curves needs at least one curve")
    by_n: dict[int, list[float]] = {}
    for curve in curves:
        for p in curve.points:
            by_n.setdefault(p.n, []).append(p.length)
    points = []
    for n in sorted(by_n):
        vals = by_n[n]
        count = len(vals)
        mean = sum(vals) / count
        if count > 1:
            var = sum((x - mean) ** 2 for x in vals) / (count - 1)
            sem = float(np.sqrt(var / count))
        else:
            sem = 0.0
        points.append(CurvePoint(n, mean, sem, count))
    return AsplCurve(points=points, mode=curves[0].mode)
