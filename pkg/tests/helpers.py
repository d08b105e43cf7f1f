"""Shared generators and independent brute-force checkers for the tests."""

from __future__ import annotations

import random
from collections import deque

from flowenum.core import Arc, Cycle, Flow, Network, ResidualArc, ResidualGraph


def make_network(node_count, specs, balances) -> Network:
    return Network(node_count, tuple(Arc(*spec) for spec in specs), tuple(balances))


def random_feasible_network(rng: random.Random, max_nodes=6, max_arcs=10,
                            max_span=3, max_cost=3):
    """Connected instance plus a witness flow it was built around.

    Balances are derived from the witness, so feasibility is guaranteed.
    Parallel and anti-parallel arcs arise naturally from the random pairs.
    """
    n = rng.randint(2, max_nodes)
    specs = []
    for node in range(1, n):
        other = rng.randrange(node)
        specs.append((node, other) if rng.random() < 0.5 else (other, node))
    total = rng.randint(n - 1, max(n - 1, max_arcs))
    while len(specs) < total:
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        specs.append((u, v))
    arcs = []
    witness = []
    for src, dst in specs:
        lower = rng.randint(0, 2)
        span = rng.randint(0, max_span)
        witness.append(rng.randint(lower, lower + span))
        arcs.append(Arc(src, dst, lower, lower + span, rng.randint(-max_cost, max_cost)))
    balances = [0] * n
    for arc, value in zip(arcs, witness):
        balances[arc.src] += value
        balances[arc.dst] -= value
    return Network(n, tuple(arcs), tuple(balances)), Flow(tuple(witness))


def synthetic_digraph(rng: random.Random, max_nodes=30) -> ResidualGraph:
    """Random digraph dressed up as a residual graph, one origin per arc."""
    n = rng.randint(2, max_nodes)
    m = rng.randint(0, min(3 * n, 60))
    arcs = []
    for index in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        arcs.append(ResidualArc(u, v, 1, 0, index, True))
    out_lists: list[list[int]] = [[] for _ in range(n)]
    for index, res in enumerate(arcs):
        out_lists[res.src].append(index)
    return ResidualGraph(n, tuple(arcs), tuple(tuple(lst) for lst in out_lists))


def digraph_has_cycle(rg: ResidualGraph) -> bool:
    """Kahn's algorithm; exact and linear."""
    indegree = [0] * rg.node_count
    for res in rg.arcs:
        indegree[res.dst] += 1
    queue = deque(i for i in range(rg.node_count) if indegree[i] == 0)
    seen = 0
    while queue:
        node = queue.popleft()
        seen += 1
        for index in rg.out_arcs[node]:
            dst = rg.arcs[index].dst
            indegree[dst] -= 1
            if indegree[dst] == 0:
                queue.append(dst)
    return seen != rg.node_count


def sbalow_bruteforce(rg: ResidualGraph, forest) -> list[int]:
    """Walk parent links while a short backward arc exists; track the min dfs."""
    result = []
    for start in range(rg.node_count):
        best = forest.order[start]
        node = start
        while True:
            parent = forest.parent_node[node]
            if parent < 0:
                break
            if not any(rg.arcs[i].dst == parent for i in rg.out_arcs[node]):
                break
            node = parent
            best = min(best, forest.order[node])
        result.append(best)
    return result


def proper_cycle_exists_bruteforce(rg: ResidualGraph, cap=500_000) -> bool:
    """Enumerate simple cycles rooted at their smallest node; stop at a proper one."""
    states = 0

    def proper(arc_indices) -> bool:
        directions: dict[int, bool] = {}
        for i in arc_indices:
            res = rg.arcs[i]
            if directions.setdefault(res.origin_arc, res.forward) != res.forward:
                return False
        return True

    for start in range(rg.node_count):
        path_nodes = [start]
        path_arcs: list[int] = []

        def extend(node) -> bool:
            nonlocal states
            states += 1
            if states > cap:
                raise RuntimeError("brute-force cycle search exceeded its cap")
            for index in rg.out_arcs[node]:
                res = rg.arcs[index]
                if res.dst == start:
                    if proper(path_arcs + [index]):
                        return True
                elif res.dst > start and res.dst not in path_nodes:
                    path_nodes.append(res.dst)
                    path_arcs.append(index)
                    if extend(res.dst):
                        return True
                    path_nodes.pop()
                    path_arcs.pop()
            return False

        if extend(start):
            return True
    return False


def random_residual_cycle(rng: random.Random, rg: ResidualGraph) -> Cycle | None:
    """Random walk until a node repeats; the loop part is a directed cycle."""
    for _ in range(60):
        node = rng.randrange(rg.node_count)
        path: list[int] = []
        seen = {node: 0}
        for _ in range(2 * rg.node_count + 4):
            options = rg.out_arcs[node]
            if not options:
                break
            index = options[rng.randrange(len(options))]
            path.append(index)
            node = rg.arcs[index].dst
            if node in seen:
                return Cycle(tuple(rg.arcs[i] for i in path[seen[node]:]))
            seen[node] = len(path)
    return None
