"""Route discovery: baseline shortest-hop flooding and the cooperative variant.

Flooding is modeled as deterministic level expansion over the range graph
(timing-free, hop-count-equivalent to per-message queues). Tie-breaks are
lowest next-hop id, which yields the lexicographically smallest minimum-hop
path. The cooperative variant only traverses an intermediate when it passes
the cooperative predicate with respect to its predecessor; endpoints are
exempt. The destination picks the lowest-hop fully-cooperative path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .coopmath import distance, is_cooperative
from .coopmath import mobility as mobility_rate
from .errors import EndpointMismatch, NoCooperativeRoute, NoRoute, UnknownNode
from .model import Route, RouteRequest, ScenarioConfig


@dataclass(frozen=True)
class NeighborEntry:
    last_hello_round: int
    energy: float
    mobility: float
    coop_status: bool


@dataclass(frozen=True)
class NeighborTable:
    owner: int
    entries: Mapping[int, NeighborEntry]


@dataclass(frozen=True)
class RouteReply:
    """Destination's answer, carried back along the chosen path reversed."""

    route: Route
    reply_path: tuple[int, ...]


def _adjacency(config: ScenarioConfig) -> dict[int, list[int]]:
    """In-range neighbor ids per node, sorted for deterministic iteration."""
    ids = sorted(n.id for n in config.nodes)
    by_id = config.node_map()
    adj: dict[int, list[int]] = {i: [] for i in ids}
    for i, u in enumerate(ids):
        for v in ids[i + 1 :]:
            d = distance(by_id[u].position, by_id[v].position, config.distance_metric)
            if d <= config.transmission_range:
                adj[u].append(v)
                adj[v].append(u)
    return adj


def exchange_hello(config: ScenarioConfig, hello_round: int = 0) -> dict[int, NeighborTable]:
    """One beacon round: every node learns its in-range neighbors along with
    their relay-relevant state (energy, mobility, cooperative status)."""
    adj = _adjacency(config)
    by_id = config.node_map()
    tables: dict[int, NeighborTable] = {}
    for owner, neighbor_ids in adj.items():
        peers = [by_id[v] for v in neighbor_ids]
        entries = {}
        for v in neighbor_ids:
            verdict = is_cooperative(by_id[v], by_id[owner], peers, config)
            entries[v] = NeighborEntry(
                last_hello_round=hello_round,
                energy=by_id[v].energy,
                mobility=mobility_rate(by_id[v].mobility_record, config.mobility_metric),
                coop_status=verdict.cooperative,
            )
        tables[owner] = NeighborTable(owner=owner, entries=entries)
    return tables


def _check_endpoints(source: int, dest: int, config: ScenarioConfig) -> None:
    ids = {n.id for n in config.nodes}
    if source not in ids:
        raise UnknownNode(source)
    if dest not in ids:
        raise UnknownNode(dest)


def _hops_to(target: int, adj: dict[int, list[int]], allowed=None) -> dict[int, int]:
    """Hop counts toward `target`; edges may be filtered by allowed(u, v)."""
    dist = {target: 0}
    frontier = deque([target])
    while frontier:
        v = frontier.popleft()
        for u in adj[v]:
            if u not in dist and (allowed is None or allowed(u, v)):
                dist[u] = dist[v] + 1
                frontier.append(u)
    return dist


def _greedy_path(source: int, dest: int, adj, hops: dict[int, int], allowed=None) -> tuple[int, ...]:
    """Walk from source choosing the lowest next-hop id that still lies on a
    minimum-hop path; yields the lexicographically smallest such path."""
    path = [source]
    cur = source
    while cur != dest:
        cur = min(
            v
            for v in adj[cur]
            if hops.get(v, -1) == hops[cur] - 1 and (allowed is None or allowed(cur, v))
        )
        path.append(cur)
    return tuple(path)


def completed_request(path: tuple[int, ...], config: ScenarioConfig) -> RouteRequest:
    """The discovery packet as the destination sees it: full path plus the
    cooperative flag each relaying intermediate appended."""
    by_id = config.node_map()
    adj = _adjacency(config)
    flags = []
    for i in range(1, len(path) - 1):
        prev = by_id[path[i - 1]]
        peers = [by_id[v] for v in adj[path[i - 1]]]
        flags.append(is_cooperative(by_id[path[i]], prev, peers, config).cooperative)
    return RouteRequest(
        source=path[0],
        destination=path[-1],
        path=tuple(path),
        hop_count=len(path) - 1,
        route_stability=tuple(flags),
    )


def _route_from_path(path: tuple[int, ...], config: ScenarioConfig) -> Route:
    request = completed_request(path, config)
    return Route(
        path=request.path,
        hop_count=request.hop_count,
        fully_cooperative=all(request.route_stability),
    )


def aodv_discover(source: int, dest: int, config: ScenarioConfig) -> Route:
    """Minimum-hop route over the range graph (first-arrival flood semantics)."""
    _check_endpoints(source, dest, config)
    if source == dest:
        return Route(path=(source,), hop_count=0, fully_cooperative=True)
    adj = _adjacency(config)
    hops = _hops_to(dest, adj)
    if source not in hops:
        raise NoRoute(source, dest)
    return _route_from_path(_greedy_path(source, dest, adj, hops), config)


def coaodv_discover(source: int, dest: int, config: ScenarioConfig) -> Route:
    """Minimum-hop route whose every intermediate is cooperative.

    Relaying intermediates append their cooperative flag; the destination
    drops candidate paths containing any CO=0 intermediate and answers the
    lowest-hop survivor. Source and destination themselves are never filtered.
    """
    _check_endpoints(source, dest, config)
    if source == dest:
        return Route(path=(source,), hop_count=0, fully_cooperative=True)
    adj = _adjacency(config)
    tables = exchange_hello(config)

    def allowed(u: int, v: int) -> bool:
        # Directed: u relays to v. Final hops into the destination are exempt.
        return v == dest or tables[u].entries[v].coop_status

    coop_hops = _hops_to(dest, adj, allowed=allowed)
    if source not in coop_hops:
        if source not in _hops_to(dest, adj):
            raise NoRoute(source, dest)
        raise NoCooperativeRoute(source, dest)
    route = _route_from_path(
        _greedy_path(source, dest, adj, coop_hops, allowed=allowed), config
    )
    assert route.fully_cooperative
    return route


def build_route_reply(chosen: Route, original: RouteRequest) -> RouteReply:
    """Answer traveling the chosen path in reverse, destination back to source."""
    if (chosen.source, chosen.destination) != (original.source, original.destination):
        raise EndpointMismatch(
            (chosen.source, chosen.destination), (original.source, original.destination)
        )
    return RouteReply(route=chosen, reply_path=tuple(reversed(chosen.path)))
