"""Pure-Python backend for the hot kernels.

Mirrors ``_speedups`` step for step: both backends consume the SplitMix64
stream in the same order and make identical accept/reject decisions, so a
growth run yields an identical event tape on either one.  This module is the
readable reference; the compiled extension is the fast path.
"""

from __future__ import annotations

import math
from bisect import bisect_right

import numpy as np

from ._rng import SplitMix64, derive_seed
from .events import KIND_EDGE, KIND_NODE, TapeBuilder

_PAIR_TRY_CAP = 10_000


# ---------------------------------------------------------------------------
# BFS / ASPL
# ---------------------------------------------------------------------------

def bfs_rowmeans(indptr, indices, sources):
    """Mean shortest-path distance from each source to all other nodes.

    Returns (rowmeans float64 array, all_reached bool).  A row mean is the
    exact integer distance sum divided by N-1.
    """
    n = len(indptr) - 1
    rowmeans = np.empty(len(sources), dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    for si, s in enumerate(sources):
        dist.fill(-1)
        dist[s] = 0
        frontier = np.asarray([s], dtype=np.int64)
        reached = 1
        d = 0
        while frontier.size:
            d += 1
            starts = indptr[frontier]
            counts = indptr[frontier + 1] - starts
            total = int(counts.sum())
            if total == 0:
                break
            shifts = np.arange(total, dtype=np.int64) - np.repeat(
                np.cumsum(counts) - counts, counts
            )
            neigh = indices[np.repeat(starts, counts) + shifts]
            newly = neigh[dist[neigh] < 0]
            if newly.size == 0:
                break
            frontier = np.unique(newly)
            dist[frontier] = d
            reached += frontier.size
        if reached < n:
            return rowmeans, False
        rowmeans[si] = int(dist.sum()) / (n - 1)
    return rowmeans, True


def _sequential_mean(values) -> float:
    total = 0.0
    for x in values:
        total += x
    return total / len(values)


def _sequential_sem(values, mean: float) -> float:
    n = len(values)
    if n < 2:
        return 0.0
    ss = 0.0
    for x in values:
        d = x - mean
        ss += d * d
    return math.sqrt(ss / (n - 1) / n)


def reduce_rowmeans(rowmeans, sampled: bool) -> tuple[float, float]:
    """(L, stderr) from per-source row means, fixed summation order."""
    vals = rowmeans.tolist()
    mean = _sequential_mean(vals)
    return (mean, _sequential_sem(vals, mean)) if sampled else (mean, 0.0)


def track_aspl(kinds, offsets, payload, rewire_slots, checkpoints,
               exact_threshold, n_sources, seed):
    """Replay a tape, measuring ASPL whenever N first reaches a checkpoint.

    Measurement happens right after the node event (and its attachment
    edges); intra-network edges emitted later at the same N are not included.
    Returns (ns, lengths, stderrs, sampled_flags); raises on disconnection.
    """
    from .errors import DisconnectedGraphError

    n_events = len(kinds)
    deg: list[int] = []
    eu: list[int] = []
    ev: list[int] = []
    out_n, out_l, out_err, out_mode = [], [], [], []
    cp_idx = 0
    n_cp = len(checkpoints)
    r_idx = 0
    n_nodes = 0

    for idx in range(n_events):
        kind = kinds[idx]
        lo, hi = offsets[idx], offsets[idx + 1]
        if kind == KIND_NODE:
            nid = n_nodes
            deg.append(0)
            n_nodes += 1
            for k in range(lo, hi):
                a = payload[k]
                eu.append(nid)
                ev.append(a)
                deg[nid] += 1
                deg[a] += 1
            while cp_idx < n_cp and checkpoints[cp_idx] < n_nodes:
                cp_idx += 1
            if cp_idx < n_cp and checkpoints[cp_idx] == n_nodes:
                cp_idx += 1
                length, err, sampled = _measure(
                    n_nodes, eu, ev, exact_threshold, n_sources, seed
                )
                if length is None:
                    raise DisconnectedGraphError(
                        f"graph disconnected at checkpoint N={n_nodes}"
                    )
                out_n.append(n_nodes)
                out_l.append(length)
                out_err.append(err)
                out_mode.append(sampled)
        elif kind == KIND_EDGE:
            i, j = payload[lo], payload[lo + 1]
            eu.append(i)
            ev.append(j)
            deg[i] += 1
            deg[j] += 1
        else:
            kept, removed, tgt = payload[lo], payload[lo + 1], payload[lo + 2]
            slot = rewire_slots[r_idx]
            r_idx += 1
            if eu[slot] == removed:
                eu[slot] = tgt
            else:
                ev[slot] = tgt
            deg[removed] -= 1
            deg[tgt] += 1
    return (
        np.asarray(out_n, dtype=np.int64),
        np.asarray(out_l, dtype=np.float64),
        np.asarray(out_err, dtype=np.float64),
        np.asarray(out_mode, dtype=np.uint8),
    )


def _measure(n, eu, ev, exact_threshold, n_sources, seed):
    if n < 2:
        return 1.0 if n > 1 else 0.0, 0.0, 0
    u = np.asarray(eu, dtype=np.int64)
    v = np.asarray(ev, dtype=np.int64)
    frm = np.concatenate([u, v])
    to = np.concatenate([v, u])
    perm = np.argsort(frm, kind="stable")
    indices = to[perm].astype(np.int32)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(np.bincount(frm, minlength=n))
    if n <= exact_threshold or n_sources >= n:
        sources = np.arange(n, dtype=np.int64)
        sampled = 0
    else:
        rng = SplitMix64(derive_seed(seed, n))
        sources = np.asarray(rng.sample_indices(n, n_sources), dtype=np.int64)
        sampled = 1
    rowmeans, ok = bfs_rowmeans(indptr, indices, sources)
    if not ok:
        return None, 0.0, 0
    length, err = reduce_rowmeans(rowmeans, bool(sampled))
    return length, err, sampled


# ---------------------------------------------------------------------------
# Growth state shared by the model loops
# ---------------------------------------------------------------------------

class _GrowState:
    """Degrees, endpoint list, edge slots, and packed-key edge membership."""

    __slots__ = ("deg", "endpoints", "eu", "ev", "keys")

    def __init__(self):
        self.deg: list[int] = []
        self.endpoints: list[int] = []
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.keys: set[int] = set()

    @property
    def n(self) -> int:
        return len(self.deg)

    @property
    def e(self) -> int:
        return len(self.eu)

    def add_node(self) -> int:
        self.deg.append(0)
        return len(self.deg) - 1

    def add_edge(self, i: int, j: int) -> None:
        self.keys.add(_key(i, j))
        self.deg[i] += 1
        self.deg[j] += 1
        self.endpoints.append(i)
        self.endpoints.append(j)
        self.eu.append(i)
        self.ev.append(j)

    def has_edge(self, i: int, j: int) -> bool:
        return _key(i, j) in self.keys

    def rewire(self, slot: int, kept: int, removed: int, tgt: int) -> None:
        self.keys.discard(_key(kept, removed))
        self.keys.add(_key(kept, tgt))
        self.deg[removed] -= 1
        self.deg[tgt] += 1
        if self.eu[slot] == removed:
            self.eu[slot] = tgt
            self.endpoints[2 * slot] = tgt
        else:
            self.ev[slot] = tgt
            self.endpoints[2 * slot + 1] = tgt


def _key(i: int, j: int) -> int:
    return (i << 32) | j if i < j else (j << 32) | i


def _seed_chain(st: _GrowState, tape: TapeBuilder, n0: int) -> None:
    st.add_node()
    tape.node(())
    for i in range(1, n0):
        st.add_node()
        tape.node((i - 1,))
        st.add_edge(i, i - 1)


def _draw_preferential(st: _GrowState, rng: SplitMix64) -> int:
    return st.endpoints[rng.below(len(st.endpoints))]


def _draw_nonedge_pair(st: _GrowState, rng: SplitMix64):
    n = st.n
    if st.e >= n * (n - 1) // 2:
        return None
    for _ in range(_PAIR_TRY_CAP):
        i = _draw_preferential(st, rng)
        j = _draw_preferential(st, rng)
        if i != j and not st.has_edge(i, j):
            return i, j
    return None


def _draw_distinct_targets(st: _GrowState, rng: SplitMix64, m: int,
                           preset: list[int]) -> list[int]:
    targets = list(preset)
    while len(targets) < m:
        cand = _draw_preferential(st, rng)
        if cand in targets:
            continue
        targets.append(cand)
    return targets


def _bernoulli(rng: SplitMix64, p: float) -> int:
    return 1 if rng.random() < p else 0


# ---------------------------------------------------------------------------
# Growth models
# ---------------------------------------------------------------------------

def dm_grow(n0, m, c0, alpha, r0, rho, steps, seed):
    """Accelerated-growth loop: one new node with m preferential edges per
    step plus floor/Bernoulli-discretized c0*t**alpha intra-network edges,
    optionally followed by r0*t**rho rewired edges."""
    rng = SplitMix64(seed)
    st = _GrowState()
    tape = TapeBuilder()
    _seed_chain(st, tape, n0)
    intra_req = intra_skip = rew_req = rew_skip = 0

    for t in range(1, steps + 1):
        targets = _draw_distinct_targets(st, rng, m, [])
        nid = st.add_node()
        tape.node(targets)
        for tg in targets:
            st.add_edge(nid, tg)

        cf = c0 * math.pow(t, alpha)
        want = int(cf) + _bernoulli(rng, cf - int(cf))
        for _ in range(want):
            intra_req += 1
            pair = _draw_nonedge_pair(st, rng)
            if pair is None:
                intra_skip += 1
            else:
                st.add_edge(*pair)
                tape.edge(*pair)

        if r0 > 0.0:
            rf = r0 * math.pow(t, rho)
            rwant = int(rf) + _bernoulli(rng, rf - int(rf))
            for _ in range(rwant):
                rew_req += 1
                if not _try_rewire(st, tape, rng):
                    rew_skip += 1

    meta = {
        "n": st.n,
        "e": st.e,
        "intra_requested": intra_req,
        "intra_skipped": intra_skip,
        "rewires_requested": rew_req,
        "rewires_skipped": rew_skip,
        "steps_run": steps,
    }
    return tape.build(meta)


def _try_rewire(st: _GrowState, tape: TapeBuilder, rng: SplitMix64) -> bool:
    slot = rng.below(st.e)
    side = rng.below(2)
    u, v = st.eu[slot], st.ev[slot]
    kept = u if side == 0 else v
    removed = v if side == 0 else u
    for _ in range(_PAIR_TRY_CAP):
        tgt = _draw_preferential(st, rng)
        if tgt != kept and not st.has_edge(kept, tgt):
            st.rewire(slot, kept, removed, tgt)
            tape.rewire(kept, removed, tgt, slot)
            return True
    return False


def sh_grow(n0, p0, mu, c1, eta, nonlinear, steps, stop_at_n, seed):
    """Simon-style loop: each step adds strictly one node (probability
    p0*t**-mu, attached to the latest involved node) or one edge from the
    latest involved node to a preferentially drawn target."""
    rng = SplitMix64(seed)
    st = _GrowState()
    tape = TapeBuilder()
    _seed_chain(st, tape, n0)
    skipped = 0
    steps_run = 0
    cum: list[float] = []

    if not (stop_at_n and st.n >= stop_at_n) and steps >= 1:
        tgt = rng.below(n0)
        nid = st.add_node()
        tape.node((tgt,))
        st.add_edge(nid, tgt)
        latest = nid
        steps_run = 1

        for t in range(2, steps + 1):
            if stop_at_n and st.n >= stop_at_n:
                break
            p = p0 * math.pow(t, -mu)
            if p > 1.0:
                p = 1.0
            if rng.random() < p:
                nid = st.add_node()
                tape.node((latest,))
                st.add_edge(nid, latest)
                latest = nid
            else:
                found = -1
                if nonlinear:
                    xi = c1 * math.pow(t, -eta)
                    del cum[:]
                    total = 0.0
                    for k in st.deg:
                        if k > 0:
                            total += math.pow(k, xi)
                        cum.append(total)
                    for _ in range(_PAIR_TRY_CAP):
                        u01 = rng.random() * total
                        idx = bisect_right(cum, u01)
                        if idx >= st.n:
                            idx = st.n - 1
                        if idx != latest and not st.has_edge(latest, idx):
                            found = idx
                            break
                else:
                    for _ in range(_PAIR_TRY_CAP):
                        idx = _draw_preferential(st, rng)
                        if idx != latest and not st.has_edge(latest, idx):
                            found = idx
                            break
                if found >= 0:
                    st.add_edge(latest, found)
                    tape.edge(latest, found)
                    latest = found
                else:
                    skipped += 1
            steps_run = t

    meta = {
        "n": st.n,
        "e": st.e,
        "edge_steps_skipped": skipped,
        "steps_run": steps_run,
    }
    return tape.build(meta)


def hybrid_grow(n0, m, c0, alpha, p0, mu, steps, seed):
    """Chain/accelerated two-regime loop.

    Every step adds one node: with probability p0*t**-mu it extends the chain
    from the previously added node; otherwise it runs an accelerated-growth
    step.  The first accelerated node after a chain stretch spends one of its
    m edges on the previously added node to close the chain loop, and only
    the remaining m-1 attach preferentially.
    """
    rng = SplitMix64(seed)
    st = _GrowState()
    tape = TapeBuilder()
    _seed_chain(st, tape, n0)
    intra_req = intra_skip = 0
    last_added = n0 - 1
    pending_close = False

    for t in range(1, steps + 1):
        p = p0 * math.pow(t, -mu)
        if p > 1.0:
            p = 1.0
        if rng.random() < p:
            nid = st.add_node()
            tape.node((last_added,))
            st.add_edge(nid, last_added)
            last_added = nid
            pending_close = True
        else:
            preset = [last_added] if pending_close else []
            targets = _draw_distinct_targets(st, rng, m, preset)
            nid = st.add_node()
            tape.node(targets)
            for tg in targets:
                st.add_edge(nid, tg)
            last_added = nid
            pending_close = False

            cf = c0 * math.pow(t, alpha)
            want = int(cf) + _bernoulli(rng, cf - int(cf))
            for _ in range(want):
                intra_req += 1
                pair = _draw_nonedge_pair(st, rng)
                if pair is None:
                    intra_skip += 1
                else:
                    st.add_edge(*pair)
                    tape.edge(*pair)

    meta = {
        "n": st.n,
        "e": st.e,
        "intra_requested": intra_req,
        "intra_skipped": intra_skip,
        "steps_run": steps,
    }
    return tape.build(meta)
