"""Domain types, scenario validation, and the JSON scenario file format.

All types are immutable value objects; `validate_scenario` checks every
invariant and never normalizes silently. The scenario document is a single
JSON object, see `scenario_from_dict` for the schema.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import (
    DuplicateNodeId,
    InvalidNodeId,
    InvalidProbability,
    NegativeEnergy,
    NegativeThreshold,
    NodeOutsideArea,
    NonPositiveRange,
    ScenarioFormatError,
    ZeroElapsedTime,
)


class DistanceMetric(str, Enum):
    MANHATTAN = "manhattan"
    EUCLIDEAN = "euclidean"


class MobilityMetric(str, Enum):
    EUCLIDEAN_RATE = "euclidean_rate"
    MANHATTAN_RATE = "manhattan_rate"


class Protocol(str, Enum):
    AODV = "aodv"
    COAODV = "coaodv"


class NetworkType(Enum):
    """Network class labeled by the dominant criterion weight."""

    DISTANCE_SENSITIVE = "Distance Sensitive Network"
    MOBILITY_SENSITIVE = "Mobility Sensitive Network"
    ENERGY_SENSITIVE = "Energy Sensitive Network"

    @property
    def label(self) -> str:
        return self.value

    @property
    def example_networks(self) -> str:
        return _NETWORK_EXAMPLES[self]


_NETWORK_EXAMPLES = {
    NetworkType.DISTANCE_SENSITIVE: "wireless networks",
    NetworkType.MOBILITY_SENSITIVE: "MANETs, VANETs",
    NetworkType.ENERGY_SENSITIVE: "sensor networks",
}


@dataclass(frozen=True)
class Position:
    x: float
    y: float


@dataclass(frozen=True)
class MobilityRecord:
    """Two recorded positions of a node and the time elapsed between them."""

    pos_t1: Position
    pos_t2: Position
    elapsed: float = 1.0


@dataclass(frozen=True)
class NodeState:
    id: int
    mobility_record: MobilityRecord
    energy: float

    @property
    def position(self) -> Position:
        """Current position; topology distances are taken at the first epoch."""
        return self.mobility_record.pos_t1


@dataclass(frozen=True)
class ScenarioConfig:
    nodes: tuple[NodeState, ...]
    area: tuple[float, float]
    transmission_range: float
    energy_threshold: float
    distance_metric: DistanceMetric = DistanceMetric.MANHATTAN
    mobility_metric: MobilityMetric = MobilityMetric.EUCLIDEAN_RATE
    threshold_strict: bool = True
    non_coop_drop_prob: float = 1.0
    rng_seed: int = 0

    def node_map(self) -> dict[int, NodeState]:
        return {n.id: n for n in self.nodes}


@dataclass(frozen=True)
class RouteRequest:
    """A discovery packet as it arrives: traversed path plus per-intermediate
    cooperative flags (the route-stability field)."""

    source: int
    destination: int
    path: tuple[int, ...]
    hop_count: int
    route_stability: tuple[bool, ...]

    def __post_init__(self):
        if not self.path or self.path[0] != self.source:
            raise ValueError("request path must start at the source")
        if len(set(self.path)) != len(self.path):
            raise ValueError("request path must not repeat nodes")
        if self.hop_count != len(self.path) - 1:
            raise ValueError("hop_count must equal len(path) - 1")
        n_intermediate = len(self.intermediates())
        if len(self.route_stability) != n_intermediate:
            raise ValueError(
                f"route_stability needs {n_intermediate} entries, "
                f"got {len(self.route_stability)}"
            )

    def intermediates(self) -> tuple[int, ...]:
        if len(self.path) > 1 and self.path[-1] == self.destination:
            return self.path[1:-1]
        return self.path[1:]


@dataclass(frozen=True)
class Route:
    path: tuple[int, ...]
    hop_count: int
    fully_cooperative: bool

    def __post_init__(self):
        if not self.path:
            raise ValueError("route path must be nonempty")
        if len(set(self.path)) != len(self.path):
            raise ValueError("route path must not repeat nodes")
        if self.hop_count != len(self.path) - 1:
            raise ValueError("hop_count must equal len(path) - 1")

    @property
    def source(self) -> int:
        return self.path[0]

    @property
    def destination(self) -> int:
        return self.path[-1]


WEIGHT_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class WeightProfile:
    """Criterion weights over (distance, mobility, energy)."""

    w_distance: float
    w_mobility: float
    w_energy: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w_distance, self.w_mobility, self.w_energy)

    def is_normalized(self) -> bool:
        return abs(math.fsum(self.as_tuple()) - 1.0) <= WEIGHT_SUM_TOLERANCE

    def is_canonical(self) -> bool:
        """One weight 0.5 and the other two 0.25."""
        return sorted(self.as_tuple()) == [0.25, 0.25, 0.5]


CANONICAL_PROFILES = (
    WeightProfile(0.5, 0.25, 0.25),
    WeightProfile(0.25, 0.5, 0.25),
    WeightProfile(0.25, 0.25, 0.5),
)


@dataclass(frozen=True)
class FlowMetrics:
    """Outcome of one (source, destination, packet_count) flow."""

    source: int
    destination: int
    hop_count: int | None
    packets_sent: int
    packets_delivered: int
    failure: str | None = None

    @property
    def packet_delivery_ratio(self) -> float | None:
        if self.packets_sent <= 0:
            return None
        return self.packets_delivered / self.packets_sent


@dataclass(frozen=True)
class SimMetrics:
    """Aggregate counters for one simulation run.

    hop_count is the total hops over routed flows (the flow's hop count for
    single-flow runs) and None when no flow found a route.
    """

    protocol: Protocol
    hop_count: int | None
    packets_sent: int
    packets_delivered: int
    route_discoveries: int
    per_flow: tuple[FlowMetrics, ...] = field(default_factory=tuple)

    @property
    def packet_delivery_ratio(self) -> float | None:
        if self.packets_sent <= 0:
            return None
        return self.packets_delivered / self.packets_sent


def validate_scenario(config: ScenarioConfig) -> ScenarioConfig:
    """Return `config` unchanged iff every invariant holds, else raise.

    Checks: unique nonnegative ids, both position epochs inside the area,
    nonnegative energies, positive transmission range, nonnegative threshold,
    probabilities in [0, 1], positive elapsed times.
    """
    if config.transmission_range <= 0 or math.isnan(config.transmission_range):
        raise NonPositiveRange(config.transmission_range)
    if config.energy_threshold < 0 or math.isnan(config.energy_threshold):
        raise NegativeThreshold(config.energy_threshold)
    if not 0.0 <= config.non_coop_drop_prob <= 1.0:
        raise InvalidProbability("non_coop_drop_prob", config.non_coop_drop_prob)

    width, height = config.area
    seen: set[int] = set()
    for node in config.nodes:
        if not isinstance(node.id, int) or isinstance(node.id, bool) or node.id < 0:
            raise InvalidNodeId(node.id)
        if node.id in seen:
            raise DuplicateNodeId(node.id)
        seen.add(node.id)
        for pos in (node.mobility_record.pos_t1, node.mobility_record.pos_t2):
            if not (0.0 <= pos.x <= width and 0.0 <= pos.y <= height):
                raise NodeOutsideArea(node.id, (pos.x, pos.y), config.area)
        if node.energy < 0 or math.isnan(node.energy):
            raise NegativeEnergy(node.id, node.energy)
        if not node.mobility_record.elapsed > 0:
            raise ZeroElapsedTime(node.id)
    return config


# --- JSON scenario document ---------------------------------------------

_REQUIRED_KEYS = ("nodes", "area", "transmission_range", "energy_threshold")


def scenario_from_dict(doc: dict) -> ScenarioConfig:
    """Build a ScenarioConfig from a parsed scenario document.

    Required keys: nodes (list of {id, pos_t1: [x, y], pos_t2: [x, y], energy}),
    area ([width, height]), transmission_range, energy_threshold.
    Optional keys with defaults: distance_metric ("manhattan"),
    mobility_metric ("euclidean_rate"), threshold_strict (true),
    non_coop_drop_prob (1.0), seed (0), elapsed_time (1.0, applied to every node).

    Raises ScenarioFormatError for structural problems; invariants are checked
    separately by validate_scenario.
    """
    if not isinstance(doc, dict):
        raise ScenarioFormatError(f"scenario document must be an object, got {type(doc).__name__}")
    missing = [k for k in _REQUIRED_KEYS if k not in doc]
    if missing:
        raise ScenarioFormatError(f"missing required keys: {', '.join(missing)}")
    try:
        elapsed = float(doc.get("elapsed_time", 1.0))
        nodes = tuple(
            NodeState(
                id=entry["id"],
                mobility_record=MobilityRecord(
                    pos_t1=Position(float(entry["pos_t1"][0]), float(entry["pos_t1"][1])),
                    pos_t2=Position(float(entry["pos_t2"][0]), float(entry["pos_t2"][1])),
                    elapsed=elapsed,
                ),
                energy=float(entry["energy"]),
            )
            for entry in doc["nodes"]
        )
        config = ScenarioConfig(
            nodes=nodes,
            area=(float(doc["area"][0]), float(doc["area"][1])),
            transmission_range=float(doc["transmission_range"]),
            energy_threshold=float(doc["energy_threshold"]),
            distance_metric=DistanceMetric(doc.get("distance_metric", "manhattan")),
            mobility_metric=MobilityMetric(doc.get("mobility_metric", "euclidean_rate")),
            threshold_strict=bool(doc.get("threshold_strict", True)),
            non_coop_drop_prob=float(doc.get("non_coop_drop_prob", 1.0)),
            rng_seed=int(doc.get("seed", 0)),
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ScenarioFormatError(f"malformed scenario document: {exc}") from exc
    return config


def scenario_to_dict(config: ScenarioConfig) -> dict:
    """Inverse of scenario_from_dict; requires a file-global elapsed time."""
    elapsed_values = {n.mobility_record.elapsed for n in config.nodes}
    if len(elapsed_values) > 1:
        raise ValueError("scenario documents cannot represent mixed per-node elapsed times")
    elapsed = elapsed_values.pop() if elapsed_values else 1.0
    return {
        "nodes": [
            {
                "id": n.id,
                "pos_t1": [n.mobility_record.pos_t1.x, n.mobility_record.pos_t1.y],
                "pos_t2": [n.mobility_record.pos_t2.x, n.mobility_record.pos_t2.y],
                "energy": n.energy,
            }
            for n in config.nodes
        ],
        "area": list(config.area),
        "transmission_range": config.transmission_range,
        "energy_threshold": config.energy_threshold,
        "distance_metric": config.distance_metric.value,
        "mobility_metric": config.mobility_metric.value,
        "threshold_strict": config.threshold_strict,
        "non_coop_drop_prob": config.non_coop_drop_prob,
        "seed": config.rng_seed,
        "elapsed_time": elapsed,
    }


def scenario_from_json(text: str) -> ScenarioConfig:
    return scenario_from_dict(json.loads(text))


def scenario_to_json(config: ScenarioConfig) -> str:
    return json.dumps(scenario_to_dict(config), indent=2) + "\n"


def load_scenario(path: str | Path) -> ScenarioConfig:
    """Read, parse, and validate a scenario file."""
    text = Path(path).read_text(encoding="utf-8")
    return validate_scenario(scenario_from_json(text))
