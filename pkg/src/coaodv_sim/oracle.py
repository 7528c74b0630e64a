"""Brute-force reference answers for route discovery, used only by tests.

Traversal is delegated to networkx (BFS shortest paths, exhaustive simple-path
enumeration) so that no graph-walking code is shared with the protocol module.
Intended for small scenarios (tests cap at 12 nodes); never used by the CLI.
"""

from __future__ import annotations

import networkx as nx

from .coopmath import distance, is_cooperative
from .model import ScenarioConfig


def _range_graph(config: ScenarioConfig) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(n.id for n in config.nodes)
    nodes = list(config.nodes)
    for i, a in enumerate(nodes):
        for b in nodes[i + 1 :]:
            d = distance(a.position, b.position, config.distance_metric)
            if d <= config.transmission_range:
                graph.add_edge(a.id, b.id)
    return graph


def bfs_shortest(source: int, dest: int, config: ScenarioConfig) -> int | None:
    """Exact minimum hop count on the range graph, or None if unreachable."""
    graph = _range_graph(config)
    if source not in graph or dest not in graph:
        return None
    try:
        return nx.shortest_path_length(graph, source, dest)
    except nx.NetworkXNoPath:
        return None


def cooperative_shortest(source: int, dest: int, config: ScenarioConfig) -> int | None:
    """Minimum hop count over simple paths whose every intermediate is
    cooperative with respect to its predecessor, or None if no such path.

    Enumerates all simple paths (feasible for the test-scale node counts) and
    applies the cooperative predicate per path position, so peer-set-relative
    clauses are evaluated exactly as route discovery encounters them.
    """
    if source == dest:
        return 0 if any(n.id == source for n in config.nodes) else None
    graph = _range_graph(config)
    if source not in graph or dest not in graph:
        return None
    by_id = config.node_map()
    best: int | None = None
    for path in nx.all_simple_paths(graph, source, dest):
        if best is not None and len(path) - 1 >= best:
            continue
        ok = True
        for i in range(1, len(path) - 1):
            prev = by_id[path[i - 1]]
            peers = [by_id[v] for v in graph.neighbors(path[i - 1])]
            if not is_cooperative(by_id[path[i]], prev, peers, config).cooperative:
                ok = False
                break
        if ok:
            best = len(path) - 1
    return best
