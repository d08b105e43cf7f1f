"""Minimum-cost flow solving, optimal node potentials, reduced costs.

The solver is successive shortest paths: lower bounds are substituted away,
arcs with negative cost are saturated up front (which leaves every residual
cost nonnegative), and each augmentation runs Dijkstra with potentials.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import count

from .core import Flow, Network, ResidualGraph, check_feasible, validate_network
from .errors import InfeasibleError, InfeasibleFlowError, NegativeCycleError


@dataclass(frozen=True)
class NodePotential:
    """Per-node potentials making every residual reduced cost nonnegative."""

    values: tuple[int, ...]
    root: int


def solve_min_cost_flow(net: Network) -> Flow:
    """One optimal integer flow, or InfeasibleError when no b-flow exists."""
    validate_network(net)
    n = net.node_count
    arcs = net.arcs
    m = len(arcs)

    # Work on the zero-lower-bound substitution; restore lowers at the end.
    span = [arc.span for arc in arcs]
    extra = [0] * m
    imbalance = list(net.balances)
    for arc in arcs:
        imbalance[arc.src] -= arc.lower
        imbalance[arc.dst] += arc.lower
    for index, arc in enumerate(arcs):
        if arc.cost < 0:
            extra[index] = span[index]
            imbalance[arc.src] -= span[index]
            imbalance[arc.dst] += span[index]

    out_arcs: list[list[int]] = [[] for _ in range(n)]
    in_arcs: list[list[int]] = [[] for _ in range(n)]
    for index, arc in enumerate(arcs):
        out_arcs[arc.src].append(index)
        in_arcs[arc.dst].append(index)

    potential = [0] * n
    while True:
        source = next((i for i in range(n) if imbalance[i] > 0), None)
        if source is None:
            break
        dist, pred = _dijkstra(net, span, extra, potential, out_arcs, in_arcs, source)
        target = None
        for node in range(n):
            if imbalance[node] < 0 and dist[node] is not None:
                if target is None or dist[node] < dist[target]:
                    target = node
        if target is None:
            raise InfeasibleError("supply cannot reach demand in the residual graph")
        reach = dist[target]
        for node in range(n):
            here = dist[node]
            potential[node] += reach if here is None or here > reach else here
        amount = min(imbalance[source], -imbalance[target])
        node = target
        while node != source:
            index, forward = pred[node]
            headroom = span[index] - extra[index] if forward else extra[index]
            amount = min(amount, headroom)
            node = arcs[index].src if forward else arcs[index].dst
        node = target
        while node != source:
            index, forward = pred[node]
            extra[index] += amount if forward else -amount
            node = arcs[index].src if forward else arcs[index].dst
        imbalance[source] -= amount
        imbalance[target] += amount

    result = Flow(tuple(arc.lower + extra[index] for index, arc in enumerate(arcs)))
    assert check_feasible(net, result)
    return result


def _dijkstra(net, span, extra, potential, out_arcs, in_arcs, source):
    n = net.node_count
    dist: list[int | None] = [None] * n
    pred: list[tuple[int, bool] | None] = [None] * n
    dist[source] = 0
    tick = count()
    heap = [(0, next(tick), source)]
    while heap:
        reached, _, node = heapq.heappop(heap)
        if reached > dist[node]:
            continue
        for index in out_arcs[node]:
            if extra[index] < span[index]:
                arc = net.arcs[index]
                weight = arc.cost + potential[node] - potential[arc.dst]
                assert weight >= 0
                candidate = reached + weight
                if dist[arc.dst] is None or candidate < dist[arc.dst]:
                    dist[arc.dst] = candidate
                    pred[arc.dst] = (index, True)
                    heapq.heappush(heap, (candidate, next(tick), arc.dst))
        for index in in_arcs[node]:
            if extra[index] > 0:
                arc = net.arcs[index]
                weight = -arc.cost + potential[node] - potential[arc.src]
                assert weight >= 0
                candidate = reached + weight
                if dist[arc.src] is None or candidate < dist[arc.src]:
                    dist[arc.src] = candidate
                    pred[arc.src] = (index, False)
                    heapq.heappush(heap, (candidate, next(tick), arc.src))
    return dist, pred


def compute_node_potentials(net: Network, flow: Flow, root: int = 0) -> NodePotential:
    """Shortest-path distances from the root across the residual graph.

    Nodes the root cannot reach are seeded as if an artificial arc of cost
    1 + sum(|cost| * max(1, upper)) led there, which is too expensive to
    shadow any real path.  Raises NegativeCycleError when the residual graph
    has a negative cycle, i.e. the flow was not optimal.
    """
    if not check_feasible(net, flow):
        raise InfeasibleFlowError("potentials are defined for feasible flows only")
    n = net.node_count
    big = 1 + sum(abs(arc.cost) * max(1, arc.upper) for arc in net.arcs)
    dist = [big] * n
    dist[root] = 0
    edges = []
    for arc, value in zip(net.arcs, flow.values):
        if value < arc.upper:
            edges.append((arc.src, arc.dst, arc.cost))
        if value > arc.lower:
            edges.append((arc.dst, arc.src, -arc.cost))
    for _ in range(max(0, n - 1)):
        changed = False
        for src, dst, weight in edges:
            candidate = dist[src] + weight
            if candidate < dist[dst]:
                dist[dst] = candidate
                changed = True
        if not changed:
            break
    else:
        for src, dst, weight in edges:
            if dist[src] + weight < dist[dst]:
                raise NegativeCycleError(
                    "residual graph has a negative cycle; the flow is not optimal"
                )
    return NodePotential(tuple(dist), root)


def compute_reduced_costs(net: Network, potential: NodePotential) -> tuple[int, ...]:
    """Per original arc: cost + potential(src) - potential(dst)."""
    values = potential.values
    return tuple(arc.cost + values[arc.src] - values[arc.dst] for arc in net.arcs)


def residual_reduced_costs(rg: ResidualGraph, reduced_costs) -> tuple[int, ...]:
    """Per residual arc: the origin's reduced cost, negated on backward arcs."""
    return tuple(
        reduced_costs[res.origin_arc] if res.forward else -reduced_costs[res.origin_arc]
        for res in rg.arcs
    )
