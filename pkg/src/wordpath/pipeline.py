"""From token streams to growing word-adjacency networks and L(N) curves.

Words are nodes; an edge links two words that were adjacent at least once.
Edges are binary (repeat adjacency adds nothing) and repeated words produce
no self-loop, so the graph stays simple and, because every new word attaches
to its predecessor, connected at every prefix.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .aspl import (
    DEFAULT_EXACT_THRESHOLD,
    DEFAULT_SAMPLE_SOURCES,
    AsplCurve,
    average_curves,
    default_schedule,
    track_growth,
)
from .errors import InsufficientDataError
from .events import EventTape, TapeBuilder
from .tokens import TokenStream, shuffle_stream, split_pieces

DEFAULT_PIECES = 25


def build_adjacency(ts: TokenStream) -> EventTape:
    """Event stream of the word-adjacency network built left to right.

    First-seen words become nodes attached to the previous word's node (the
    very first word has no attachment); repeats emit an edge to the previous
    word unless it already exists or the word repeats itself.
    """
    tape = TapeBuilder()
    edges: set[int] = set()
    seen = [False] * ts.n_distinct
    prev = -1
    for cur in ts.token_ids():
        if not seen[cur]:
            seen[cur] = True
            tape.node((prev,) if prev >= 0 else ())
            if prev >= 0:
                edges.add(_key(prev, cur))
        elif cur != prev:
            k = _key(prev, cur)
            if k not in edges:
                edges.add(k)
                tape.edge(prev, cur)
        prev = cur
    return tape.build({"n": ts.n_distinct, "e": len(edges), "tau": ts.n_tokens})


def _key(i: int, j: int) -> int:
    return (i << 32) | j if i < j else (j << 32) | i


def curve_for_text(ts: TokenStream, schedule=None,
                   exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
                   sample_sources: int = DEFAULT_SAMPLE_SOURCES,
                   seed: int = 0) -> AsplCurve:
    """L(N) curve of the growing adjacency network of one token stream."""
    if ts.n_distinct < 2:
        raise InsufficientDataError(
            f"text has {ts.n_distinct} distinct tokens; need at least 2"
        )
    if schedule is None:
        schedule = default_schedule(ts.n_distinct)
    return track_growth(build_adjacency(ts), schedule,
                        exact_threshold=exact_threshold,
                        sample_sources=sample_sources, seed=seed)


def _piece_curve(args):
    tokens, schedule, exact_threshold, sample_sources, seed = args
    return curve_for_text(TokenStream(tokens), schedule,
                          exact_threshold=exact_threshold,
                          sample_sources=sample_sources, seed=seed)


def piece_ensemble(ts: TokenStream, pieces: int = DEFAULT_PIECES, schedule=None,
                   exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
                   sample_sources: int = DEFAULT_SAMPLE_SOURCES,
                   seed: int = 0, jobs: int = 1):
    """Split a text into contiguous pieces and average their L(N) curves.

    Returns (per-piece curves, mean curve).  Pieces too short to reach a
    checkpoint simply do not contribute there; pieces with fewer than two
    distinct tokens are skipped entirely.
    """
    if pieces < 2:
        raise ValueError("piece ensemble needs pieces >= 2")
    streams = [p for p in split_pieces(ts, pieces) if p.n_distinct >= 2]
    if not streams:
        raise InsufficientDataError("no piece has two distinct tokens")
    if schedule is None:
        schedule = default_schedule(max(p.n_distinct for p in streams))
    args = [(p.tokens, schedule, exact_threshold, sample_sources, seed)
            for p in streams]
    curves = _map_jobs(_piece_curve, args, jobs)
    return curves, average_curves(curves)


def _surrogate_curve(args):
    tokens, shuffle_seed, schedule, exact_threshold, sample_sources, seed = args
    shuffled = shuffle_stream(TokenStream(tokens), shuffle_seed)
    return curve_for_text(shuffled, schedule,
                          exact_threshold=exact_threshold,
                          sample_sources=sample_sources, seed=seed)


def surrogate_comparison(ts: TokenStream, realizations: int, seed: int,
                         schedule=None, pieces: int | None = None,
                         exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
                         sample_sources: int = DEFAULT_SAMPLE_SOURCES,
                         jobs: int = 1):
    """Original-vs-reshuffled comparison.

    Returns (original curve, surrogate mean curve).  The surrogate curve is
    the mean with SEM over ``realizations`` independently reshuffled copies
    (shuffle seeds are seed, seed+1, ...); the original curve is either a
    single-curve run or a piece-ensemble mean when ``pieces`` is given.
    """
    if realizations < 2:
        raise ValueError("surrogate comparison needs realizations >= 2")
    if ts.n_distinct < 2:
        raise InsufficientDataError("text needs at least 2 distinct tokens")
    if schedule is None:
        schedule = default_schedule(ts.n_distinct)
    if pieces is not None and pieces >= 2:
        _, original = piece_ensemble(ts, pieces, schedule,
                                     exact_threshold=exact_threshold,
                                     sample_sources=sample_sources,
                                     seed=seed, jobs=jobs)
    else:
        original = curve_for_text(ts, schedule,
                                  exact_threshold=exact_threshold,
                                  sample_sources=sample_sources, seed=seed)
    args = [(ts.tokens, seed + r, schedule, exact_threshold, sample_sources, seed)
            for r in range(realizations)]
    surrogate = average_curves(_map_jobs(_surrogate_curve, args, jobs))
    return original, surrogate


def _map_jobs(fn, args, jobs: int):
    """Order-preserving map, optionally across processes; the reduction order
    is fixed by the argument order so results are independent of jobs."""
    if jobs <= 1 or len(args) <= 1:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, args))
