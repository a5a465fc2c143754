"""Backend selection for the hot kernels.

The compiled extension (``wordpath._speedups``) is preferred when importable;
otherwise the pure-Python mirror in ``_pure`` is used.  Both produce
identical results for identical inputs, including random streams, so the
choice only affects speed.  Set ``WORDPATH_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pure

_ext = None
if os.environ.get("WORDPATH_PURE", "") in ("", "0"):
    try:
        from . import _speedups as _ext
    except ImportError:
        _ext = None

HAVE_SPEEDUPS = _ext is not None


def backend_name() -> str:
    return "compiled" if _ext is not None else "pure"


reduce_rowmeans = _pure.reduce_rowmeans


def bfs_rowmeans(indptr, indices, sources):
    """(rowmeans, all_reached) for BFS from each source over CSR adjacency."""
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int32)
    sources = np.ascontiguousarray(sources, dtype=np.int64)
    if _ext is not None:
        return _ext.bfs_rowmeans(indptr, indices, sources)
    return _pure.bfs_rowmeans(indptr, indices, sources)


def track_aspl(kinds, offsets, payload, rewire_slots, checkpoints,
               exact_threshold, n_sources, seed):
    """Replay a tape and measure ASPL at checkpoints; see aspl.track_growth."""
    kinds = np.ascontiguousarray(kinds, dtype=np.uint8)
    offsets = np.ascontiguousarray(offsets, dtype=np.int64)
    payload = np.ascontiguousarray(payload, dtype=np.int32)
    rewire_slots = np.ascontiguousarray(rewire_slots, dtype=np.int64)
    checkpoints = np.ascontiguousarray(checkpoints, dtype=np.int64)
    if _ext is not None:
        ns, lengths, errs, modes, ok = _ext.track_aspl(
            kinds, offsets, payload, rewire_slots, checkpoints,
            int(exact_threshold), int(n_sources), int(seed) & ((1 << 64) - 1),
        )
        if not ok:
            from .errors import DisconnectedGraphError

            raise DisconnectedGraphError("graph disconnected at a checkpoint")
        return ns, lengths, errs, modes
    return _pure.track_aspl(kinds, offsets, payload, rewire_slots, checkpoints,
                            exact_threshold, n_sources, seed)


def dm_grow(n0, m, c0, alpha, r0, rho, steps, seed):
    if _ext is not None:
        return _wrap_tape(_ext.dm_grow(
            int(n0), int(m), float(c0), float(alpha), float(r0), float(rho),
            int(steps), int(seed) & ((1 << 64) - 1)),
            ("n", "e", "intra_requested", "intra_skipped",
             "rewires_requested", "rewires_skipped", "steps_run"))
    return _pure.dm_grow(n0, m, c0, alpha, r0, rho, steps, seed)


def sh_grow(n0, p0, mu, c1, eta, nonlinear, steps, stop_at_n, seed):
    if _ext is not None:
        return _wrap_tape(_ext.sh_grow(
            int(n0), float(p0), float(mu), float(c1), float(eta),
            int(bool(nonlinear)), int(steps), int(stop_at_n),
            int(seed) & ((1 << 64) - 1)),
            ("n", "e", "edge_steps_skipped", "steps_run"))
    return _pure.sh_grow(n0, p0, mu, c1, eta, nonlinear, steps, stop_at_n, seed)


def hybrid_grow(n0, m, c0, alpha, p0, mu, steps, seed):
    if _ext is not None:
        return _wrap_tape(_ext.hybrid_grow(
            int(n0), int(m), float(c0), float(alpha), float(p0), float(mu),
            int(steps), int(seed) & ((1 << 64) - 1)),
            ("n", "e", "intra_requested", "intra_skipped", "steps_run"))
    return _pure.hybrid_grow(n0, m, c0, alpha, p0, mu, steps, seed)


def _wrap_tape(result, meta_keys):
    from .events import EventTape

    kinds, offsets, payload, rewire_slots, stats = result
    meta = dict(zip(meta_keys, (int(x) for x in stats)))
    return EventTape(kinds=kinds, offsets=offsets, payload=payload,
                     meta=meta, _rewire_slots=rewire_slots)
