"""Growing-network models emitting deterministic event tapes.

Four processes are implemented on top of the same machinery:

* ``dm_grow``: accelerated growth -- each step adds one node with m
  degree-proportional edges plus c0*t**alpha intra-network edges, with an
  optional edge-rewiring extension r0*t**rho.
* ``sh_grow``: each step adds strictly one node (probability p0*t**-mu,
  attached to the latest involved node) or one edge from that node to a
  preferential target; the nonlinear variant raises degrees to a decaying
  power c1*t**-eta when drawing the target.
* ``hybrid_grow``: per-step choice between chain extension (probability
  p0*t**-mu) and an accelerated-growth step, with the first accelerated node
  after a chain stretch closing the chain loop.

All are deterministic for a given seed, and the same seed yields the same
tape on the compiled and pure backends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .events import EventTape

ALPHA_MAX = 1.1  # acceleration beyond ~1 drives the graph complete in finite time


@dataclass(frozen=True)
class DmParams:
    """Accelerated-growth parameters (chain seed of n0 nodes)."""

    m: int = 2
    c0: float = 0.0
    alpha: float = 1.0
    n0: int = 7
    rewire_r0: float = 0.0
    rewire_rho: float = 0.0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.c0 < 0:
            raise ValueError("c0 must be >= 0")
        if not 0 < self.alpha <= ALPHA_MAX:
            raise ValueError(f"alpha must be in (0, {ALPHA_MAX}]")
        if self.n0 < max(self.m, 2):
            raise ValueError("seed chain must have n0 >= max(m, 2) nodes")
        if self.rewire_r0 < 0:
            raise ValueError("rewire_r0 must be >= 0")

    @property
    def e0(self) -> int:
        return self.n0 - 1


@dataclass(frozen=True)
class ShParams:
    """Simon-style growth; nonlinear preference needs both c1 and eta."""

    p0: float = 1.0
    mu: float = 0.075
    c1: float | None = None
    eta: float | None = None
    n0: int = 1

    def __post_init__(self):
        if not 0 < self.p0 <= 1:
            raise ValueError("p0 must be in (0, 1]")
        if self.mu <= 0:
            raise ValueError("mu must be > 0")
        if (self.c1 is None) != (self.eta is None):
            raise ValueError("nonlinear preference needs both c1 and eta")
        if self.c1 is not None and (self.c1 <= 0 or self.eta <= 0):
            raise ValueError("c1 and eta must be > 0")
        if self.n0 < 1:
            raise ValueError("seed needs at least one node")

    @property
    def nonlinear(self) -> bool:
        return self.c1 is not None


@dataclass(frozen=True)
class HybridParams:
    """Chain regime probability p0*t**-mu on top of accelerated growth.

    mu == 0 is accepted for the pure-chain limiting case (with p0 == 1 the
    graph stays a path forever); p0 == 0 reduces exactly to plain
    accelerated growth.
    """

    dm: DmParams = field(default_factory=DmParams)
    p0: float = 1.0
    mu: float = 0.075

    def __post_init__(self):
        if not 0 <= self.p0 <= 1:
            raise ValueError("p0 must be in [0, 1]")
        if self.mu < 0:
            raise ValueError("mu must be >= 0")
        if self.dm.rewire_r0 != 0:
            raise ValueError("rewiring is not part of the hybrid model")


def new_node_probability(p0: float, mu: float, t: int) -> float:
    """p(t) = min(1, p0 * t**-mu), the chain/new-node step probability."""
    return min(1.0, p0 * math.pow(t, -mu))


def nonlinear_exponent(c1: float, eta: float, t: int) -> float:
    """xi(t) = c1 * t**-eta, the decaying preference exponent."""
    return c1 * math.pow(t, -eta)


def acceleration(c0: float, alpha: float, t: int) -> float:
    """c(t) = c0 * t**alpha, the intra-network edge rate."""
    return c0 * math.pow(t, alpha)


def dm_expected_edges(params: DmParams, steps: int) -> float:
    """Exact expected edge count: e0 + sum over steps of (m + c(t)).

    The floor+Bernoulli discretization of c(t) adds c(t) edges per step in
    expectation, so this is the oracle the realized count is tested against
    (minus any skipped near-complete draws).
    """
    total = float(params.e0)
    for t in range(1, steps + 1):
        total += params.m + acceleration(params.c0, params.alpha, t)
    return total


def dm_grow(params: DmParams, steps: int, seed: int) -> EventTape:
    """Accelerated-growth event stream; N(steps) = steps + n0 exactly."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    tape = kernels.dm_grow(params.n0, params.m, params.c0, params.alpha,
                           params.rewire_r0, params.rewire_rho, steps, seed)
    tape.meta.update(model="dm", seed=seed, params=params)
    return tape


def sh_grow(params: ShParams, steps: int, seed: int,
            stop_at_n: int | None = None) -> EventTape:
    """Simon-style event stream; stops early if N reaches ``stop_at_n``."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    tape = kernels.sh_grow(params.n0, params.p0, params.mu,
                           params.c1 or 0.0, params.eta or 0.0,
                           params.nonlinear, steps, stop_at_n or 0, seed)
    tape.meta.update(model="sh", seed=seed, params=params)
    return tape


def hybrid_grow(params: HybridParams, steps: int, seed: int) -> EventTape:
    """Two-regime event stream; N(steps) = steps + n0 exactly.

    With p0 == 0 the run is delegated to the plain accelerated-growth loop so
    the tape matches ``dm_grow`` with the same seed bit for bit.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    dm = params.dm
    if params.p0 == 0.0:
        tape = kernels.dm_grow(dm.n0, dm.m, dm.c0, dm.alpha, 0.0, 0.0, steps, seed)
    else:
        tape = kernels.hybrid_grow(dm.n0, dm.m, dm.c0, dm.alpha,
                                   params.p0, params.mu, steps, seed)
    tape.meta.update(model="hybrid", seed=seed, params=params)
    return tape


def replay(tape: EventTape, onto=None):
    """Rebuild the graph from an event stream (see EventTape.replay)."""
    return tape.replay(onto=onto)
