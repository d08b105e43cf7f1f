"""All-optimal-flow enumeration by binary partition of the solution space.

The network is reduced once: arcs with nonzero reduced cost are frozen at
the initial optimum and dropped, balances absorb their flow, and every
feasible flow of what remains extends to an optimal flow of the original
network.  Each discovered flow then splits its search region into two
disjoint halves on the first arc where it differs from the region's
witness, so no flow is ever produced twice.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterator

from .core import Flow, Network, validate_network
from .dfs import find_another_feasible_flow
from .errors import IdenticalFlowsError
from .solver import compute_node_potentials, compute_reduced_costs, solve_min_cost_flow


@dataclass(frozen=True)
class BoundOverride:
    """Replace one side of one arc's capacity interval."""

    arc: int
    which: str  # "lower" or "upper"
    value: int


@dataclass(frozen=True)
class Subproblem:
    """Search region: an override chain plus a witness flow living inside it."""

    overrides: tuple | None  # linked (BoundOverride, parent) pairs, shared tails
    witness: Flow


@dataclass
class EnumerationStats:
    another_flow_calls: int = 0


@dataclass(frozen=True)
class ReducedNetwork:
    base: Network
    kept_arcs: tuple[int, ...]
    removed_arcs: tuple[int, ...]
    balances: tuple[int, ...]
    network: Network


def reduce_network(net: Network, flow: Flow, reduced_costs) -> ReducedNetwork:
    """Restrict to zero-reduced-cost arcs; balances absorb the frozen flow."""
    kept = tuple(a for a in range(net.arc_count) if reduced_costs[a] == 0)
    removed = tuple(a for a in range(net.arc_count) if reduced_costs[a] != 0)
    balances = list(net.balances)
    for index in removed:
        arc = net.arcs[index]
        balances[arc.src] -= flow.values[index]
        balances[arc.dst] += flow.values[index]
    inner = Network(net.node_count, tuple(net.arcs[a] for a in kept), tuple(balances))
    return ReducedNetwork(net, kept, removed, tuple(balances), inner)


def restrict_flow(reduced: ReducedNetwork, flow: Flow) -> Flow:
    return Flow(tuple(flow.values[a] for a in reduced.kept_arcs))


def splice_flow(reduced: ReducedNetwork, base_flow: Flow, inner_flow: Flow) -> Flow:
    """Inner flow on the kept arcs, the frozen base flow everywhere else."""
    values = list(base_flow.values)
    for position, arc_id in enumerate(reduced.kept_arcs):
        values[arc_id] = inner_flow.values[position]
    return Flow(tuple(values))


def find_another_optimal_flow(net: Network, flow: Flow, reduced_costs) -> Flow | None:
    """An optimal flow different from the input one, or None if it is unique."""
    reduced = reduce_network(net, flow, reduced_costs)
    other = find_another_feasible_flow(reduced.network, restrict_flow(reduced, flow))
    if other is None:
        return None
    return splice_flow(reduced, flow, other)


def partition_solution_space(flow: Flow, other: Flow) -> tuple[BoundOverride, BoundOverride]:
    """Split on the first differing arc; first override keeps `flow`, second `other`."""
    for arc_id, (mine, theirs) in enumerate(zip(flow.values, other.values)):
        if mine != theirs:
            if mine < theirs:
                return (
                    BoundOverride(arc_id, "upper", mine),
                    BoundOverride(arc_id, "lower", mine + 1),
                )
            return (
                BoundOverride(arc_id, "lower", mine),
                BoundOverride(arc_id, "upper", mine - 1),
            )
    raise IdenticalFlowsError("cannot partition on two identical flows")


def apply_overrides(net: Network, chain: tuple | None) -> Network:
    """Network with the chain's bound overrides applied (latest override wins)."""
    if chain is None:
        return net
    tightest: dict[tuple[int, str], int] = {}
    node = chain
    while node is not None:
        override, node = node
        tightest.setdefault((override.arc, override.which), override.value)
    arcs = list(net.arcs)
    for (arc_id, which), value in tightest.items():
        arcs[arc_id] = replace(arcs[arc_id], **{which: value})
    return Network(net.node_count, tuple(arcs), net.balances)


def iter_optimal_flows(
    net: Network,
    limit: int | None = None,
    stats: EnumerationStats | None = None,
) -> Iterator[Flow]:
    """Every optimal integer flow exactly once, the solver's optimum first."""
    validate_network(net)
    if limit is not None and limit <= 0:
        return
    first = solve_min_cost_flow(net)
    potential = compute_node_potentials(net, first)
    reduced_costs = compute_reduced_costs(net, potential)
    reduced = reduce_network(net, first, reduced_costs)
    yield first
    emitted = 1
    if limit is not None and emitted >= limit:
        return
    pending = [Subproblem(None, restrict_flow(reduced, first))]
    while pending:
        region = pending.pop()
        if stats is not None:
            stats.another_flow_calls += 1
        constrained = apply_overrides(reduced.network, region.overrides)
        other = find_another_feasible_flow(constrained, region.witness)
        if other is None:
            continue
        yield splice_flow(reduced, first, other)
        emitted += 1
        if limit is not None and emitted >= limit:
            return
        keep_here, move_there = partition_solution_space(region.witness, other)
        pending.append(Subproblem((move_there, region.overrides), other))
        pending.append(Subproblem((keep_here, region.overrides), region.witness))


def enumerate_all_optimal(
    net: Network,
    sink: Callable[[Flow], None] | None = None,
    limit: int | None = None,
    stats: EnumerationStats | None = None,
) -> int:
    """Feed every optimal flow to the sink; returns how many were emitted."""
    emitted = 0
    for flow in iter_optimal_flows(net, limit=limit, stats=stats):
        if sink is not None:
            sink(flow)
        emitted += 1
    return emitted
