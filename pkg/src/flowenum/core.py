"""Networks, integer flows, residual graphs, and cycle augmentation.

Everything is exact integer arithmetic.  Residual arcs remember which
original arc they came from, so graphs with parallel or anti-parallel arcs
stay unambiguous: a cycle is "proper" exactly when it never uses both
residual directions of one original arc.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    BadBoundsError,
    CapacityExceededError,
    DimensionMismatchError,
    DisconnectedError,
    InfeasibleFlowError,
    InfiniteCapacityError,
    NetworkValidationError,
    UnbalancedSupplyError,
)


@dataclass(frozen=True)
class Arc:
    """Directed arc with integer capacity bounds and cost."""

    src: int
    dst: int
    lower: int
    upper: int
    cost: int

    def __post_init__(self) -> None:
        for bound in (self.lower, self.upper):
            if not isinstance(bound, int) or isinstance(bound, bool):
                raise InfiniteCapacityError(f"capacities must be finite integers, got {bound!r}")
        if self.src == self.dst:
            raise NetworkValidationError(f"self-loop on node {self.src}")
        if not 0 <= self.lower <= self.upper:
            raise BadBoundsError(
                f"arc ({self.src},{self.dst}) requires 0 <= lower <= upper, "
                f"got [{self.lower},{self.upper}]"
            )

    @property
    def span(self) -> int:
        return self.upper - self.lower


@dataclass(frozen=True)
class Network:
    """Immutable arc-list network with per-node balances."""

    node_count: int
    arcs: tuple[Arc, ...]
    balances: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(self, "balances", tuple(self.balances))
        if self.node_count < 1:
            raise NetworkValidationError("a network needs at least one node")
        if len(self.balances) != self.node_count:
            raise NetworkValidationError(
                f"{self.node_count} nodes but {len(self.balances)} balances"
            )
        for arc in self.arcs:
            if not (0 <= arc.src < self.node_count and 0 <= arc.dst < self.node_count):
                raise NetworkValidationError(f"arc endpoint out of range: {arc}")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)


def validate_network(net: Network) -> None:
    """Raise unless the network satisfies every structural invariant."""
    for balance in net.balances:
        if not isinstance(balance, int) or isinstance(balance, bool):
            raise NetworkValidationError(f"balances must be integers, got {balance!r}")
    if sum(net.balances) != 0:
        raise UnbalancedSupplyError(f"balances sum to {sum(net.balances)}, expected 0")
    if net.node_count > 1:
        adjacent: list[list[int]] = [[] for _ in range(net.node_count)]
        for arc in net.arcs:
            adjacent[arc.src].append(arc.dst)
            adjacent[arc.dst].append(arc.src)
        seen = {0}
        queue = deque([0])
        while queue:
            node = queue.popleft()
            for other in adjacent[node]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        if len(seen) != net.node_count:
            raise DisconnectedError(
                f"underlying undirected graph is disconnected "
                f"({len(seen)} of {net.node_count} nodes reachable)"
            )


@dataclass(frozen=True)
class Flow:
    """Integer flow values indexed by arc id."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))


def _require_dimensions(net: Network, flow: Flow) -> None:
    if len(flow.values) != net.arc_count:
        raise DimensionMismatchError(
            f"flow has {len(flow.values)} values for {net.arc_count} arcs"
        )


def check_feasible(net: Network, flow: Flow) -> bool:
    """True iff the flow meets every capacity bound and node balance."""
    _require_dimensions(net, flow)
    for arc, value in zip(net.arcs, flow.values):
        if not arc.lower <= value <= arc.upper:
            return False
    net_out = [0] * net.node_count
    for arc, value in zip(net.arcs, flow.values):
        net_out[arc.src] += value
        net_out[arc.dst] -= value
    return all(net_out[i] == net.balances[i] for i in range(net.node_count))


def flow_cost(net: Network, flow: Flow) -> int:
    """Total cost of the flow: sum of arc cost times arc value."""
    _require_dimensions(net, flow)
    return sum(arc.cost * value for arc, value in zip(net.arcs, flow.values))


@dataclass(frozen=True)
class ResidualArc:
    """One direction of spare capacity left on an original arc."""

    src: int
    dst: int
    residual_capacity: int
    cost: int
    origin_arc: int
    forward: bool


@dataclass(frozen=True)
class ResidualGraph:
    node_count: int
    arcs: tuple[ResidualArc, ...]
    out_arcs: tuple[tuple[int, ...], ...]


def build_residual(net: Network, flow: Flow) -> ResidualGraph:
    """Residual graph of a feasible flow, ordered by (origin arc, forward first)."""
    if not check_feasible(net, flow):
        raise InfeasibleFlowError("cannot build the residual graph of an infeasible flow")
    arcs: list[ResidualArc] = []
    for index, (arc, value) in enumerate(zip(net.arcs, flow.values)):
        if value < arc.upper:
            arcs.append(ResidualArc(arc.src, arc.dst, arc.upper - value, arc.cost, index, True))
        if value > arc.lower:
            arcs.append(ResidualArc(arc.dst, arc.src, value - arc.lower, -arc.cost, index, False))
    out_lists: list[list[int]] = [[] for _ in range(net.node_count)]
    for index, res in enumerate(arcs):
        out_lists[res.src].append(index)
    return ResidualGraph(net.node_count, tuple(arcs), tuple(tuple(lst) for lst in out_lists))


@dataclass(frozen=True)
class Cycle:
    """Closed directed walk of residual arcs."""

    arcs: tuple[ResidualArc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(self.arcs))
        if not self.arcs:
            raise ValueError("a cycle needs at least one arc")
        for here, there in zip(self.arcs, self.arcs[1:] + self.arcs[:1]):
            if here.dst != there.src:
                raise ValueError("cycle arcs do not chain into a closed walk")

    def is_proper(self) -> bool:
        """No original arc used in both residual directions."""
        directions: dict[int, bool] = {}
        for res in self.arcs:
            if directions.setdefault(res.origin_arc, res.forward) != res.forward:
                return False
        return True

    def incidence(self, arc_count: int) -> tuple[int, ...]:
        """Signed traversal count per original arc id."""
        chi = [0] * arc_count
        for res in self.arcs:
            chi[res.origin_arc] += 1 if res.forward else -1
        return tuple(chi)


def cycle_cost(cycle: Cycle) -> int:
    """Sum of residual costs along the cycle."""
    return sum(res.cost for res in cycle.arcs)


def augment(flow: Flow, cycle: Cycle, amount: int) -> Flow:
    """Push `amount` units around the cycle; never exceeds residual capacity."""
    if amount < 1:
        raise ValueError(f"augmentation amount must be positive, got {amount}")
    limit = min(res.residual_capacity for res in cycle.arcs)
    if amount > limit:
        raise CapacityExceededError(f"amount {amount} exceeds cycle capacity {limit}")
    values = list(flow.values)
    for res in cycle.arcs:
        values[res.origin_arc] += amount if res.forward else -amount
    return Flow(tuple(values))
