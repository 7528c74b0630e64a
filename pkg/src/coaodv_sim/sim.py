"""Deterministic round-based simulation: discovery, then data transfer.

Each flow performs one route discovery with the selected protocol and then
sends its packets along the discovered route. Every non-cooperative
intermediate drops a traversing packet with the scenario's drop probability;
a dropped packet never reaches later hops. All randomness comes from one
`random.Random` (Mersenne Twister) seeded per run, so identical runs are
bit-for-bit reproducible.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from . import protocol
from .errors import NoCooperativeRoute, NoRoute, UnknownNode
from .model import FlowMetrics, Protocol, ScenarioConfig, SimMetrics

log = logging.getLogger("coaodv_sim.sim")


@dataclass(frozen=True)
class Flow:
    source: int
    destination: int
    packets: int


@dataclass(frozen=True)
class SimRun:
    scenario: ScenarioConfig
    protocol: Protocol
    flows: tuple[Flow, ...]
    seed: int


_DISCOVER = {
    Protocol.AODV: protocol.aodv_discover,
    Protocol.COAODV: protocol.coaodv_discover,
}


def _check_flows(flows: tuple[Flow, ...], scenario: ScenarioConfig) -> None:
    ids = {n.id for n in scenario.nodes}
    for flow in flows:
        if flow.source not in ids:
            raise UnknownNode(flow.source)
        if flow.destination not in ids:
            raise UnknownNode(flow.destination)
        if flow.packets < 1:
            raise ValueError(f"flow {flow.source}->{flow.destination}: packets must be >= 1")


def run(simrun: SimRun) -> SimMetrics:
    """Execute one seeded run and aggregate its metrics."""
    _check_flows(simrun.flows, simrun.scenario)
    rng = random.Random(simrun.seed)
    discover = _DISCOVER[simrun.protocol]
    drop_prob = simrun.scenario.non_coop_drop_prob

    per_flow: list[FlowMetrics] = []
    for flow in simrun.flows:
        try:
            route = discover(flow.source, flow.destination, simrun.scenario)
        except NoRoute:
            per_flow.append(
                FlowMetrics(flow.source, flow.destination, None, 0, 0, failure="no_route")
            )
            log.info("flow %s->%s: no route", flow.source, flow.destination)
            continue
        except NoCooperativeRoute:
            per_flow.append(
                FlowMetrics(
                    flow.source, flow.destination, None, 0, 0, failure="no_cooperative_route"
                )
            )
            log.info("flow %s->%s: no cooperative route", flow.source, flow.destination)
            continue

        request = protocol.completed_request(route.path, simrun.scenario)
        droppable = [not ok for ok in request.route_stability]
        delivered = 0
        for _ in range(flow.packets):
            lost = False
            for drops in droppable:
                if drops and rng.random() < drop_prob:
                    lost = True
                    break
            if not lost:
                delivered += 1
        per_flow.append(
            FlowMetrics(flow.source, flow.destination, route.hop_count, flow.packets, delivered)
        )
        log.debug(
            "flow %s->%s: path=%s delivered=%d/%d",
            flow.source,
            flow.destination,
            route.path,
            delivered,
            flow.packets,
        )

    routed = [f.hop_count for f in per_flow if f.hop_count is not None]
    return SimMetrics(
        protocol=simrun.protocol,
        hop_count=sum(routed) if routed else None,
        packets_sent=sum(f.packets_sent for f in per_flow),
        packets_delivered=sum(f.packets_delivered for f in per_flow),
        route_discoveries=len(per_flow),
        per_flow=tuple(per_flow),
    )


def compare(
    scenario: ScenarioConfig, flows: tuple[Flow, ...], seeds: list[int]
) -> list[tuple[SimMetrics, SimMetrics]]:
    """Run both protocols on identical inputs for every seed, in seed order."""
    if not seeds:
        raise ValueError("compare requires at least one seed")
    results = []
    for seed in seeds:
        pair = tuple(
            run(SimRun(scenario=scenario, protocol=proto, flows=flows, seed=seed))
            for proto in (Protocol.AODV, Protocol.COAODV)
        )
        results.append(pair)
    return results


def mean_pdr(metrics: list[SimMetrics]) -> float | None:
    """Mean packet delivery ratio over flows that sent packets; None if none did."""
    values = [
        f.packet_delivery_ratio
        for m in metrics
        for f in m.per_flow
        if f.packet_delivery_ratio is not None
    ]
    return sum(values) / len(values) if values else None


def mean_hops(metrics: list[SimMetrics]) -> float | None:
    """Mean hop count over routed flows; None if no flow found a route."""
    values = [f.hop_count for m in metrics for f in m.per_flow if f.hop_count is not None]
    return sum(values) / len(values) if values else None
