"""Spanning-tree flow structures: induced cycles, count bounds, cycle basis.

A tree solution pins every non-tree arc at one of its capacity bounds; each
non-tree arc then induces exactly one cycle through the tree.  The induced
cycles with zero reduced cost form a basis for all optimal flows, which is
what the count bounds and the coordinate extraction below exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Cycle, Flow, Network, check_feasible, cycle_cost, validate_network
from .errors import (
    ArcInTreeError,
    CycleEntirelyInTreeError,
    DimensionMismatchError,
    InfeasibleFlowError,
)

COUNT_CAP = 2**63 - 1
_PIVOT_CAP = 200_000


@dataclass(frozen=True)
class TreeStructure:
    """Spanning tree plus the lower/upper split of the remaining arcs."""

    network: Network
    tree_arcs: tuple[int, ...]
    lower_set: frozenset[int]
    upper_set: frozenset[int]
    potentials: tuple[int, ...]
    root: int
    parent_node: tuple[int, ...]
    parent_arc: tuple[int, ...]
    depth: tuple[int, ...]

    def reduced_cost(self, arc_id: int) -> int:
        arc = self.network.arcs[arc_id]
        return arc.cost + self.potentials[arc.src] - self.potentials[arc.dst]

    def is_tree_arc(self, arc_id: int) -> bool:
        return arc_id not in self.lower_set and arc_id not in self.upper_set


@dataclass(frozen=True)
class InducedCycle:
    """The unique cycle a non-tree arc closes through the tree, signed.

    Members are (arc id, sign) pairs; +1 rides the arc in its own direction,
    -1 opposes it.  The defining arc comes first and carries +1 when it sits
    in the lower set, -1 when in the upper set.
    """

    arc: int
    members: tuple[tuple[int, int], ...]

    def incidence(self, arc_count: int) -> tuple[int, ...]:
        chi = [0] * arc_count
        for arc_id, sign in self.members:
            chi[arc_id] += sign
        return tuple(chi)

    def cost(self, net: Network) -> int:
        return sum(sign * net.arcs[arc_id].cost for arc_id, sign in self.members)


def _headroom(net: Network, values, arc_id: int, sign: int) -> int:
    arc = net.arcs[arc_id]
    return arc.upper - values[arc_id] if sign > 0 else values[arc_id] - arc.lower


def _tree_tables(net: Network, tree_arcs, root: int = 0):
    parent_node = [-1] * net.node_count
    parent_arc = [-1] * net.node_count
    depth = [0] * net.node_count
    potentials = [0] * net.node_count
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(net.node_count)]
    for arc_id in tree_arcs:
        arc = net.arcs[arc_id]
        adjacency[arc.src].append((arc.dst, arc_id))
        adjacency[arc.dst].append((arc.src, arc_id))
    seen = [False] * net.node_count
    seen[root] = True
    stack = [root]
    while stack:
        node = stack.pop()
        for neighbor, arc_id in adjacency[node]:
            if seen[neighbor]:
                continue
            seen[neighbor] = True
            parent_node[neighbor] = node
            parent_arc[neighbor] = arc_id
            depth[neighbor] = depth[node] + 1
            arc = net.arcs[arc_id]
            if arc.src == node:
                potentials[neighbor] = potentials[node] + arc.cost
            else:
                potentials[neighbor] = potentials[node] - arc.cost
            stack.append(neighbor)
    assert all(seen), "tree arcs must span the network"
    return parent_node, parent_arc, depth, potentials


def _tree_path(parent_node, parent_arc, depth, net: Network, start: int, goal: int):
    """Signed steps walking start -> goal through the tree."""
    ups: list[tuple[int, int]] = []
    downs: list[tuple[int, int]] = []
    x, y = start, goal
    while depth[x] > depth[y]:
        arc_id = parent_arc[x]
        ups.append((arc_id, 1 if net.arcs[arc_id].src == x else -1))
        x = parent_node[x]
    while depth[y] > depth[x]:
        arc_id = parent_arc[y]
        downs.append((arc_id, -1 if net.arcs[arc_id].src == y else 1))
        y = parent_node[y]
    while x != y:
        arc_id = parent_arc[x]
        ups.append((arc_id, 1 if net.arcs[arc_id].src == x else -1))
        x = parent_node[x]
        arc_id = parent_arc[y]
        downs.append((arc_id, -1 if net.arcs[arc_id].src == y else 1))
        y = parent_node[y]
    return ups + downs[::-1]


def _find_free_cycle(net: Network, free):
    """Signed closed walk through arcs that sit strictly between their bounds."""
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(net.node_count)]
    for arc_id in free:
        arc = net.arcs[arc_id]
        adjacency[arc.src].append((arc.dst, arc_id))
        adjacency[arc.dst].append((arc.src, arc_id))
    discovered = [False] * net.node_count
    parent_edge = [-1] * net.node_count
    parent_node = [-1] * net.node_count
    for start in range(net.node_count):
        if discovered[start]:
            continue
        discovered[start] = True
        stack = [(start, 0)]
        while stack:
            node, cursor = stack[-1]
            if cursor >= len(adjacency[node]):
                stack.pop()
                continue
            stack[-1] = (node, cursor + 1)
            neighbor, arc_id = adjacency[node][cursor]
            if arc_id == parent_edge[node]:
                continue
            if discovered[neighbor]:
                # Undirected DFS: any non-parent edge leads to an ancestor.
                walk = []
                x = node
                while x != neighbor:
                    edge = parent_edge[x]
                    walk.append((edge, 1 if net.arcs[edge].src == x else -1))
                    x = parent_node[x]
                walk.append((arc_id, 1 if net.arcs[arc_id].src == neighbor else -1))
                return walk
            discovered[neighbor] = True
            parent_edge[neighbor] = arc_id
            parent_node[neighbor] = node
            stack.append((neighbor, 0))
    return None


def _cancel_free_cycles(net: Network, values) -> None:
    while True:
        free = [
            a for a in range(net.arc_count)
            if net.arcs[a].lower < values[a] < net.arcs[a].upper
        ]
        walk = _find_free_cycle(net, free)
        if walk is None:
            return
        walk_cost = sum(sign * net.arcs[arc_id].cost for arc_id, sign in walk)
        if walk_cost > 0:
            walk = [(arc_id, -sign) for arc_id, sign in walk]
        room = min(_headroom(net, values, arc_id, sign) for arc_id, sign in walk)
        for arc_id, sign in walk:
            values[arc_id] += sign * room


def _initial_tree(net: Network, values) -> list[int]:
    """Free arcs first, then tight arcs by (span, id), merged Kruskal-style."""
    leader = list(range(net.node_count))

    def find(x: int) -> int:
        while leader[x] != x:
            leader[x] = leader[leader[x]]
            x = leader[x]
        return x

    def union(x: int, y: int) -> bool:
        x, y = find(x), find(y)
        if x == y:
            return False
        leader[x] = y
        return True

    free = [
        a for a in range(net.arc_count)
        if net.arcs[a].lower < values[a] < net.arcs[a].upper
    ]
    tree = []
    for arc_id in free:
        merged = union(net.arcs[arc_id].src, net.arcs[arc_id].dst)
        assert merged, "free arcs form a forest after cancellation"
        tree.append(arc_id)
    free_set = set(free)
    rest = sorted(
        (a for a in range(net.arc_count) if a not in free_set),
        key=lambda a: (net.arcs[a].span, a),
    )
    for arc_id in rest:
        if union(net.arcs[arc_id].src, net.arcs[arc_id].dst):
            tree.append(arc_id)
    return sorted(tree)


def _pivot_to_optimal(net: Network, values, tree: list[int]) -> list[int]:
    """Degenerate simplex pivots (Bland's rule) until no sign condition fails.

    Only zero-headroom swaps happen, so the flow never changes; a violating
    arc whose cycle still has headroom means the flow was not optimal, and
    those are left alone.
    """
    for _ in range(_PIVOT_CAP):
        in_tree = set(tree)
        parent_node, parent_arc, depth, potentials = _tree_tables(net, tree)
        swap = None
        for arc_id in range(net.arc_count):
            if arc_id in in_tree:
                continue
            arc = net.arcs[arc_id]
            if arc.lower == arc.upper:
                continue
            reduced = arc.cost + potentials[arc.src] - potentials[arc.dst]
            if values[arc_id] == arc.lower and reduced < 0:
                orientation = 1
            elif values[arc_id] == arc.upper and reduced > 0:
                orientation = -1
            else:
                continue
            members = [(arc_id, orientation)] + [
                (step, orientation * sign)
                for step, sign in _tree_path(parent_node, parent_arc, depth, net, arc.dst, arc.src)
            ]
            if min(_headroom(net, values, e, s) for e, s in members) > 0:
                continue  # a genuinely negative cycle: the flow was not optimal
            swap = (arc_id, members)
            break
        if swap is None:
            return tree
        entering, members = swap
        blocking = [
            e for e, s in members
            if e != entering and _headroom(net, values, e, s) == 0
        ]
        leaving = min(blocking)
        tree = sorted([t for t in tree if t != leaving] + [entering])
    raise RuntimeError("tree pivoting did not terminate")


def to_tree_solution(net: Network, flow: Flow) -> tuple[Flow, TreeStructure]:
    """An equal-or-cheaper flow whose free arcs fit a spanning tree, plus the tree.

    Free cycles are canceled along their cheaper direction, so an optimal
    input keeps its cost, and the returned structure then certifies
    optimality: zero reduced cost on tree arcs, nonnegative on the lower
    set, nonpositive on the upper set.
    """
    validate_network(net)
    if not check_feasible(net, flow):
        raise InfeasibleFlowError("tree solutions exist for feasible flows only")
    values = list(flow.values)
    _cancel_free_cycles(net, values)
    tree = _initial_tree(net, values)
    tree = _pivot_to_optimal(net, values, tree)
    parent_node, parent_arc, depth, potentials = _tree_tables(net, tree)
    in_tree = set(tree)
    lower_set = frozenset(
        a for a in range(net.arc_count)
        if a not in in_tree and values[a] == net.arcs[a].lower
    )
    upper_set = frozenset(
        a for a in range(net.arc_count)
        if a not in in_tree and a not in lower_set
    )
    structure = TreeStructure(
        net,
        tuple(tree),
        lower_set,
        upper_set,
        tuple(potentials),
        0,
        tuple(parent_node),
        tuple(parent_arc),
        tuple(depth),
    )
    return Flow(tuple(values)), structure


def induced_cycle(ts: TreeStructure, arc_id: int) -> InducedCycle:
    """The cycle closed by a non-tree arc, oriented by its lower/upper side."""
    if ts.is_tree_arc(arc_id):
        raise ArcInTreeError(f"arc {arc_id} is a tree arc")
    arc = ts.network.arcs[arc_id]
    orientation = 1 if arc_id in ts.lower_set else -1
    path = _tree_path(ts.parent_node, ts.parent_arc, ts.depth, ts.network, arc.dst, arc.src)
    members = ((arc_id, orientation), *((e, orientation * s) for e, s in path))
    return InducedCycle(arc_id, members)


def induced_cycle_capacity(ts: TreeStructure, flow: Flow, cycle: InducedCycle) -> int:
    """Largest augmentation the cycle's orientation admits at this flow."""
    return min(_headroom(ts.network, flow.values, e, s) for e, s in cycle.members)


def zero_cost_nontree_set(ts: TreeStructure) -> tuple[int, ...]:
    """Non-tree arcs with zero reduced cost under the tree potentials."""
    return tuple(
        a for a in sorted(ts.lower_set | ts.upper_set) if ts.reduced_cost(a) == 0
    )


def count_upper_bound(ts: TreeStructure, zero_arcs) -> int:
    """max(1, product of (span + 1)) over the basis arcs, capped at 2**63 - 1."""
    total = 1
    for arc_id in zero_arcs:
        total *= ts.network.arcs[arc_id].span + 1
        if total > COUNT_CAP:
            return COUNT_CAP
    return max(1, total)


def count_lower_bound(ts: TreeStructure, zero_arcs, flow: Flow, reading: str = "max") -> int:
    """Sum of induced-cycle capacities over the basis arcs.

    The "max" reading returns max(1, sum); "min" returns min(1, sum), which
    is vacuous but reported alongside for comparison.
    """
    total = sum(
        induced_cycle_capacity(ts, flow, induced_cycle(ts, a)) for a in zero_arcs
    )
    if reading == "max":
        return max(1, total)
    if reading == "min":
        return min(1, total)
    raise ValueError(f"unknown reading {reading!r}")


def feasible_count_bounds(ts: TreeStructure, flow: Flow) -> tuple[int, int]:
    """Same bound formulas taken over every non-tree arc."""
    nontree = tuple(sorted(ts.lower_set | ts.upper_set))
    lower = max(
        1,
        sum(induced_cycle_capacity(ts, flow, induced_cycle(ts, a)) for a in nontree),
    )
    upper = 1
    for arc_id in nontree:
        upper *= ts.network.arcs[arc_id].span + 1
        if upper > COUNT_CAP:
            upper = COUNT_CAP
            break
    return lower, max(1, upper)


def decompose_cycle(ts: TreeStructure, walk: Sequence[tuple[int, int]]) -> list[InducedCycle]:
    """Induced cycles of the walk's non-tree arcs.

    The symmetric difference of their arc sets reproduces the walk's arc
    set.  The walk is validated as a closed chain of (arc id, sign) steps.
    """
    if not walk:
        raise CycleEntirelyInTreeError("empty cycle")
    net = ts.network
    head = None
    first_tail = None
    for arc_id, sign in walk:
        arc = net.arcs[arc_id]
        tail, tip = (arc.src, arc.dst) if sign > 0 else (arc.dst, arc.src)
        if head is None:
            first_tail = tail
        elif tail != head:
            raise ValueError("walk arcs do not chain")
        head = tip
    if head != first_tail:
        raise ValueError("walk is not closed")
    nontree = [arc_id for arc_id, _ in walk if not ts.is_tree_arc(arc_id)]
    if not nontree:
        raise CycleEntirelyInTreeError("every arc of the cycle lies in the tree")
    return [induced_cycle(ts, arc_id) for arc_id in nontree]


def incidence_sum_check(ts: TreeStructure, cycle: Cycle) -> bool:
    """Do the cycle's incidence vector and cost equal the induced-cycle sums?"""
    net = ts.network
    arc_count = net.arc_count
    chi = cycle.incidence(arc_count)
    total_chi = [0] * arc_count
    total_cost = 0
    for arc_id in range(arc_count):
        if chi[arc_id] == 0 or ts.is_tree_arc(arc_id):
            continue
        part = induced_cycle(ts, arc_id)
        for member, sign in part.members:
            total_chi[member] += sign
        total_cost += part.cost(net)
    return tuple(total_chi) == chi and total_cost == cycle_cost(cycle)


def express_in_cycle_basis(ts: TreeStructure, flow: Flow, other: Flow):
    """Coordinates of `other` over the zero-cost induced cycles.

    Returns {arc id: coefficient} with 0 <= coefficient <= span for every
    basis arc, or None when `other` cannot be written that way (it is not
    an optimal flow for this structure).
    """
    net = ts.network
    if len(flow.values) != net.arc_count or len(other.values) != net.arc_count:
        raise DimensionMismatchError("flows must index the structure's network")
    coefficients: dict[int, int] = {}
    for arc_id in zero_cost_nontree_set(ts):
        delta = other.values[arc_id] - flow.values[arc_id]
        coefficient = delta if arc_id in ts.lower_set else -delta
        if not 0 <= coefficient <= net.arcs[arc_id].span:
            return None
        coefficients[arc_id] = coefficient
    rebuilt = list(flow.values)
    for arc_id, coefficient in coefficients.items():
        if coefficient == 0:
            continue
        for member, sign in induced_cycle(ts, arc_id).members:
            rebuilt[member] += coefficient * sign
    if tuple(rebuilt) != other.values:
        return None
    if not check_feasible(net, Flow(tuple(rebuilt))):
        return None
    return coefficients
