import dataclasses
import random

import pytest

from coaodv_sim.errors import UnknownNode
from coaodv_sim.model import Protocol
from coaodv_sim.sim import Flow, SimRun, compare, mean_hops, mean_pdr, run

from .conftest import make_node, make_scenario, random_scenario


def test_paper_aodv_flow_delivers_nothing_at_full_drop(paper_scenario):
    metrics = run(SimRun(paper_scenario, Protocol.AODV, (Flow(0, 9, 100),), seed=1))
    flow = metrics.per_flow[0]
    assert flow.hop_count == 4
    assert flow.packets_sent == 100
    # the discovered path relays through non-cooperative nodes, which always
    # refuse at drop probability 1.0
    assert flow.packets_delivered == 0
    assert flow.packet_delivery_ratio == 0.0
    assert metrics.route_discoveries == 1


def test_paper_coaodv_flow_has_no_route(paper_scenario):
    metrics = run(SimRun(paper_scenario, Protocol.COAODV, (Flow(0, 9, 100),), seed=1))
    flow = metrics.per_flow[0]
    assert flow.failure == "no_cooperative_route"
    assert flow.packets_sent == 0
    assert flow.packet_delivery_ratio is None
    assert metrics.hop_count is None
    assert metrics.route_discoveries == 1


def test_coaodv_route_survives_any_drop_probability(paper_scenario):
    harsh = dataclasses.replace(paper_scenario, non_coop_drop_prob=1.0)
    metrics = run(SimRun(harsh, Protocol.COAODV, (Flow(4, 9, 50),), seed=3))
    assert metrics.per_flow[0].packet_delivery_ratio == 1.0


def test_zero_drop_probability_delivers_everything(paper_scenario):
    gentle = dataclasses.replace(paper_scenario, non_coop_drop_prob=0.0)
    for protocol in (Protocol.AODV, Protocol.COAODV):
        metrics = run(SimRun(gentle, protocol, (Flow(4, 9, 25),), seed=9))
        assert metrics.per_flow[0].packet_delivery_ratio == 1.0


def test_self_flow_is_a_zero_hop_delivery(paper_scenario):
    metrics = run(SimRun(paper_scenario, Protocol.AODV, (Flow(0, 0, 1),), seed=1))
    flow = metrics.per_flow[0]
    assert flow.hop_count == 0
    assert flow.packet_delivery_ratio == 1.0


def test_unroutable_flow_is_recorded_not_raised():
    config = make_scenario([make_node(0, 0, 0), make_node(1, 99, 99)])
    metrics = run(SimRun(config, Protocol.AODV, (Flow(0, 1, 10),), seed=0))
    assert metrics.per_flow[0].failure == "no_route"
    assert metrics.packets_sent == 0
    assert metrics.packet_delivery_ratio is None


def test_flow_validation():
    config = make_scenario([make_node(0, 0, 0)])
    with pytest.raises(UnknownNode):
        run(SimRun(config, Protocol.AODV, (Flow(0, 7, 1),), seed=0))
    with pytest.raises(ValueError):
        run(SimRun(config, Protocol.AODV, (Flow(0, 0, 0),), seed=0))


def test_replay_determinism(paper_scenario):
    half = dataclasses.replace(paper_scenario, non_coop_drop_prob=0.5)
    simrun = SimRun(half, Protocol.AODV, (Flow(0, 9, 200), Flow(4, 9, 50)), seed=77)
    assert run(simrun) == run(simrun)


def test_different_seed_changes_partial_drops(paper_scenario):
    half = dataclasses.replace(paper_scenario, non_coop_drop_prob=0.5)
    flows = (Flow(0, 9, 500),)
    a = run(SimRun(half, Protocol.AODV, flows, seed=1))
    b = run(SimRun(half, Protocol.AODV, flows, seed=2))
    assert a.packets_delivered != b.packets_delivered


def test_conservation_and_bounds_on_random_runs():
    rng = random.Random(99)
    for _ in range(30):
        config = dataclasses.replace(random_scenario(rng), non_coop_drop_prob=rng.random())
        ids = [n.id for n in config.nodes]
        src, dst = rng.sample(ids, 2)
        protocol = rng.choice([Protocol.AODV, Protocol.COAODV])
        metrics = run(SimRun(config, protocol, (Flow(src, dst, 40),), seed=rng.randrange(2**32)))
        assert metrics.packets_delivered <= metrics.packets_sent
        pdr = metrics.packet_delivery_ratio
        if pdr is not None:
            assert 0.0 <= pdr <= 1.0


def test_compare_pairs_protocols_per_seed(paper_scenario):
    results = compare(paper_scenario, (Flow(0, 9, 10),), seeds=[5, 6])
    assert len(results) == 2
    for aodv_metrics, coaodv_metrics in results:
        assert aodv_metrics.protocol is Protocol.AODV
        assert coaodv_metrics.protocol is Protocol.COAODV


def test_compare_hop_monotonicity_when_both_route(paper_scenario):
    (aodv_metrics, coaodv_metrics), = compare(paper_scenario, (Flow(4, 9, 10),), seeds=[1])
    assert coaodv_metrics.hop_count >= aodv_metrics.hop_count


def test_compare_zero_flows_yields_empty_metrics(paper_scenario):
    (aodv_metrics, coaodv_metrics), = compare(paper_scenario, (), seeds=[1])
    assert aodv_metrics.per_flow == ()
    assert aodv_metrics.packets_sent == 0
    assert coaodv_metrics.packet_delivery_ratio is None


def test_compare_requires_a_seed(paper_scenario):
    with pytest.raises(ValueError):
        compare(paper_scenario, (Flow(0, 9, 1),), seeds=[])


def test_mean_helpers(paper_scenario):
    results = compare(paper_scenario, (Flow(0, 9, 10), Flow(4, 9, 10)), seeds=[1, 2])
    aodv_all = [pair[0] for pair in results]
    coaodv_all = [pair[1] for pair in results]
    assert mean_hops(aodv_all) == 3.0  # flows of 4 and 2 hops
    assert mean_hops(coaodv_all) == 2.0  # only the routed flow counts
    assert mean_pdr(coaodv_all) == 1.0
    assert mean_pdr([]) is None
