"""Growth event streams.

Every growth process (simulated models and the text-adjacency builder) is
recorded as a flat tape of events that rebuilds the graph exactly when
replayed onto an empty graph:

* node event: a new node (ids are sequential) plus the edges attaching it
* edge event: one new edge between existing nodes
* rewire event: an existing edge loses one endpoint and gains another

The tape is stored as compact arrays (kind codes, payload offsets, payload
ints) so compiled kernels can produce and consume it without boxing, and it
serializes to a line-oriented text form for archiving runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from .errors import CorruptStreamError
from .graph import Graph

KIND_NODE = 0
KIND_EDGE = 1
KIND_REWIRE = 2


class NodeAdded(NamedTuple):
    attachments: tuple[int, ...]


class EdgeAdded(NamedTuple):
    i: int
    j: int


class EdgeRewired(NamedTuple):
    kept: int
    old_target: int
    new_target: int


@dataclass
class EventTape:
    """Immutable growth event sequence with replay and serialization."""

    kinds: np.ndarray          # uint8, one code per event
    offsets: np.ndarray        # int64, len == n_events + 1, into payload
    payload: np.ndarray        # int32, event arguments
    meta: dict = field(default_factory=dict)
    _rewire_slots: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.kinds)

    def __iter__(self) -> Iterator[NodeAdded | EdgeAdded | EdgeRewired]:
        kinds, offsets, payload = self.kinds, self.offsets, self.payload
        for idx in range(len(kinds)):
            lo, hi = offsets[idx], offsets[idx + 1]
            args = payload[lo:hi]
            kind = kinds[idx]
            if kind == KIND_NODE:
                yield NodeAdded(tuple(int(a) for a in args))
            elif kind == KIND_EDGE:
                yield EdgeAdded(int(args[0]), int(args[1]))
            else:
                yield EdgeRewired(int(args[0]), int(args[1]), int(args[2]))

    @property
    def n_node_events(self) -> int:
        return int(np.count_nonzero(self.kinds == KIND_NODE))

    @property
    def has_rewires(self) -> bool:
        return bool(np.any(self.kinds == KIND_REWIRE))

    def rewire_slots(self) -> np.ndarray:
        """Edge-array slot touched by each rewire event, in event order.

        Growth kernels record the slots as they emit rewires; tapes parsed
        from text recover them here with one dictionary replay.
        """
        if self._rewire_slots is None:
            slots = []
            edge_slot: dict[tuple[int, int], int] = {}
            n_nodes = 0
            n_edges = 0
            for ev in self:
                if isinstance(ev, NodeAdded):
                    for a in ev.attachments:
                        edge_slot[_ekey(n_nodes, a)] = n_edges
                        n_edges += 1
                    n_nodes += 1
                elif isinstance(ev, EdgeAdded):
                    edge_slot[_ekey(ev.i, ev.j)] = n_edges
                    n_edges += 1
                else:
                    try:
                        slot = edge_slot.pop(_ekey(ev.kept, ev.old_target))
                    except KeyError:
                        raise CorruptStreamError(
                            f"rewire of missing edge ({ev.kept}, {ev.old_target})"
                        ) from None
                    edge_slot[_ekey(ev.kept, ev.new_target)] = slot
                    slots.append(slot)
            self._rewire_slots = np.asarray(slots, dtype=np.int64)
        return self._rewire_slots

    def replay(self, onto: Graph | None = None, stop_nodes: int | None = None) -> Graph:
        """Rebuild the graph; raises CorruptStreamError on inconsistencies.

        ``stop_nodes`` stops right after the node event that brings the node
        count to that value (the state at which growth trackers measure).
        """
        g = onto if onto is not None else Graph()
        track_slots = self.has_rewires
        edge_slot: dict[tuple[int, int], int] = {}
        if track_slots and g.n_edges:
            for slot, (u, v) in enumerate(g.edges()):
                edge_slot[_ekey(u, v)] = slot
        for ev in self:
            if isinstance(ev, NodeAdded):
                nid = g.add_node()
                for a in ev.attachments:
                    if not 0 <= a < nid:
                        raise CorruptStreamError(
                            f"node {nid} attaches to unknown node {a}"
                        )
                    if not g.add_edge(nid, a):
                        raise CorruptStreamError(
                            f"node {nid} attaches twice to {a}"
                        )
                    if track_slots:
                        edge_slot[_ekey(nid, a)] = g.n_edges - 1
                if stop_nodes is not None and g.n_nodes >= stop_nodes:
                    return g
            elif isinstance(ev, EdgeAdded):
                try:
                    added = g.add_edge(ev.i, ev.j)
                except ValueError as exc:
                    raise CorruptStreamError(str(exc)) from None
                if not added:
                    raise CorruptStreamError(f"duplicate edge ({ev.i}, {ev.j})")
                if track_slots:
                    edge_slot[_ekey(ev.i, ev.j)] = g.n_edges - 1
            else:
                try:
                    slot = edge_slot.pop(_ekey(ev.kept, ev.old_target))
                except KeyError:
                    raise CorruptStreamError(
                        f"rewire of missing edge ({ev.kept}, {ev.old_target})"
                    ) from None
                try:
                    g.rewire_edge(slot, ev.kept, ev.new_target)
                except ValueError as exc:
                    raise CorruptStreamError(str(exc)) from None
                edge_slot[_ekey(ev.kept, ev.new_target)] = slot
        return g

    def graph_at(self, n_nodes: int) -> Graph:
        """Graph state right after the node count first reaches ``n_nodes``."""
        return self.replay(stop_nodes=n_nodes)

    def to_text(self, fh) -> None:
        """Line-oriented archive: ``N a b ...`` / ``E i j`` / ``R i j k``."""
        for ev in self:
            if isinstance(ev, NodeAdded):
                if ev.attachments:
                    fh.write("N " + " ".join(map(str, ev.attachments)) + "\n")
                else:
                    fh.write("N\n")
            elif isinstance(ev, EdgeAdded):
                fh.write(f"E {ev.i} {ev.j}\n")
            else:
                fh.write(f"R {ev.kept} {ev.old_target} {ev.new_target}\n")


def _ekey(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


class TapeBuilder:
    """Accumulates events into the packed array form."""

    def __init__(self):
        self.kinds: list[int] = []
        self.ends: list[int] = []
        self.payload: list[int] = []
        self.rewire_slots: list[int] = []

    def node(self, attachments) -> None:
        self.kinds.append(KIND_NODE)
        self.payload.extend(attachments)
        self.ends.append(len(self.payload))

    def edge(self, i: int, j: int) -> None:
        self.kinds.append(KIND_EDGE)
        self.payload.extend((i, j))
        self.ends.append(len(self.payload))

    def rewire(self, kept: int, old_target: int, new_target: int, slot: int) -> None:
        self.kinds.append(KIND_REWIRE)
        self.payload.extend((kept, old_target, new_target))
        self.ends.append(len(self.payload))
        self.rewire_slots.append(slot)

    def build(self, meta: dict | None = None) -> EventTape:
        offsets = np.zeros(len(self.kinds) + 1, dtype=np.int64)
        if self.ends:
            offsets[1:] = np.asarray(self.ends, dtype=np.int64)
        return EventTape(
            kinds=np.asarray(self.kinds, dtype=np.uint8),
            offsets=offsets,
            payload=np.asarray(self.payload, dtype=np.int32),
            meta=meta or {},
            _rewire_slots=np.asarray(self.rewire_slots, dtype=np.int64),
        )


def tape_from_text(lines, meta: dict | None = None) -> EventTape:
    """Parse the text archive form back into a tape (header comments skipped)."""
    builder = TapeBuilder()
    edge_slot: dict[tuple[int, int], int] = {}
    n_nodes = 0
    n_edges = 0
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag, args = parts[0], [int(x) for x in parts[1:]]
        if tag == "N":
            builder.node(args)
            for a in args:
                edge_slot[_ekey(n_nodes, a)] = n_edges
                n_edges += 1
            n_nodes += 1
        elif tag == "E":
            if len(args) != 2:
                raise CorruptStreamError(f"bad edge line: {line!r}")
            builder.edge(*args)
            edge_slot[_ekey(args[0], args[1])] = n_edges
            n_edges += 1
        elif tag == "R":
            if len(args) != 3:
                raise CorruptStreamError(f"bad rewire line: {line!r}")
            kept, old_target, new_target = args
            try:
                slot = edge_slot.pop(_ekey(kept, old_target))
            except KeyError:
                raise CorruptStreamError(
                    f"rewire of missing edge ({kept}, {old_target})"
                ) from None
            edge_slot[_ekey(kept, new_target)] = slot
            builder.rewire(kept, old_target, new_target, slot)
        else:
            raise CorruptStreamError(f"unknown event line: {line!r}")
    return builder.build(meta)
