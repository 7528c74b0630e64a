import random
from pathlib import Path

import pytest

from coaodv_sim.model import (
    MobilityRecord,
    NodeState,
    Position,
    ScenarioConfig,
    load_scenario,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
PAPER_SCENARIO = REPO_ROOT / "scenarios" / "paper_table123.json"


@pytest.fixture(scope="session")
def paper_scenario() -> ScenarioConfig:
    return load_scenario(PAPER_SCENARIO)


def make_node(node_id, x1, y1, x2=None, y2=None, energy=1000.0, elapsed=1.0) -> NodeState:
    x2 = x1 if x2 is None else x2
    y2 = y1 if y2 is None else y2
    return NodeState(
        id=node_id,
        mobility_record=MobilityRecord(Position(x1, y1), Position(x2, y2), elapsed),
        energy=energy,
    )


def make_scenario(nodes, transmission_range=20.0, energy_threshold=500.0, **kwargs):
    return ScenarioConfig(
        nodes=tuple(nodes),
        area=kwargs.pop("area", (100.0, 100.0)),
        transmission_range=transmission_range,
        energy_threshold=energy_threshold,
        **kwargs,
    )


def random_scenario(rng: random.Random, n_nodes: int | None = None) -> ScenarioConfig:
    """Random scenario in the acceptance sweep's shape: 4-12 nodes placed
    uniformly in 100x100 (both epochs), energies uniform in [0, 2000], r=20."""
    n = n_nodes if n_nodes is not None else rng.randint(4, 12)
    nodes = [
        make_node(
            i,
            rng.uniform(0, 100),
            rng.uniform(0, 100),
            rng.uniform(0, 100),
            rng.uniform(0, 100),
            energy=rng.uniform(0, 2000),
        )
        for i in range(n)
    ]
    return make_scenario(nodes)


def dense_random_scenario(rng: random.Random) -> ScenarioConfig:
    """Like random_scenario but nodes cluster in a random 30-55 unit patch of
    the area, so multi-hop routes and cooperative detours actually occur."""
    n = rng.randint(4, 12)
    side = rng.uniform(30, 55)
    x0 = rng.uniform(0, 100 - side)
    y0 = rng.uniform(0, 100 - side)
    nodes = [
        make_node(
            i,
            rng.uniform(x0, x0 + side),
            rng.uniform(y0, y0 + side),
            rng.uniform(x0, x0 + side),
            rng.uniform(y0, y0 + side),
            energy=rng.uniform(0, 2000),
        )
        for i in range(n)
    ]
    return make_scenario(nodes)
