"""Pure math for the cooperative-routing criteria.

Distances between node positions, the binary in-range predicate, the node
mobility rate from its two-epoch record, the three-clause cooperative
predicate, and the weighted composite score with its min-max normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyPeerSet, WeightsNotNormalized, ZeroElapsedTime
from .model import (
    DistanceMetric,
    MobilityMetric,
    MobilityRecord,
    NodeState,
    Position,
    ScenarioConfig,
    WeightProfile,
)


def manhattan_distance(a: Position, b: Position) -> float:
    return abs(a.x - b.x) + abs(a.y - b.y)


def euclidean_distance(a: Position, b: Position) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def distance(a: Position, b: Position, metric: DistanceMetric) -> float:
    if metric is DistanceMetric.MANHATTAN:
        return manhattan_distance(a, b)
    return euclidean_distance(a, b)


def has_comm_capability(
    a: Position,
    b: Position,
    transmission_range: float,
    metric: DistanceMetric = DistanceMetric.MANHATTAN,
) -> int:
    """1 if the two positions are within range (boundary inclusive), else 0."""
    return 1 if distance(a, b, metric) <= transmission_range else 0


def mobility(rec: MobilityRecord, metric: MobilityMetric = MobilityMetric.EUCLIDEAN_RATE) -> float:
    """Displacement rate between the two recorded positions.

    The default mode divides straight-line displacement by the elapsed time;
    manhattan_rate uses the axis-aligned displacement instead (compatibility
    mode for integer-grid movement records).
    """
    if not rec.elapsed > 0:
        raise ZeroElapsedTime()
    if metric is MobilityMetric.MANHATTAN_RATE:
        moved = manhattan_distance(rec.pos_t1, rec.pos_t2)
    else:
        moved = euclidean_distance(rec.pos_t1, rec.pos_t2)
    return moved / rec.elapsed


@dataclass(frozen=True)
class CoopVerdict:
    """Outcome of the cooperative predicate, clause by clause."""

    cooperative: bool
    energy_ok: bool
    range_ok: bool
    mobility_ok: bool

    def __post_init__(self):
        if self.cooperative != (self.energy_ok and self.range_ok and self.mobility_ok):
            raise ValueError("cooperative must be the conjunction of the three clauses")


def is_cooperative(
    candidate: NodeState,
    prev: NodeState,
    peers: Sequence[NodeState],
    config: ScenarioConfig,
) -> CoopVerdict:
    """Evaluate whether `candidate` is a cooperative next hop after `prev`.

    peers are the rival next-hop candidates (the in-range neighbors of prev).
    Clauses: residual energy above the threshold (strictly, unless the
    scenario relaxes it), candidate in range of prev, and candidate's mobility
    minimal over the peers' mobilities (ties pass).
    """
    if not peers:
        raise EmptyPeerSet()
    if config.threshold_strict:
        energy_ok = candidate.energy > config.energy_threshold
    else:
        energy_ok = candidate.energy >= config.energy_threshold
    range_ok = bool(
        has_comm_capability(
            prev.position, candidate.position, config.transmission_range, config.distance_metric
        )
    )
    least = min(mobility(p.mobility_record, config.mobility_metric) for p in peers)
    mobility_ok = mobility(candidate.mobility_record, config.mobility_metric) <= least
    return CoopVerdict(
        cooperative=energy_ok and range_ok and mobility_ok,
        energy_ok=energy_ok,
        range_ok=range_ok,
        mobility_ok=mobility_ok,
    )


def composite_score(d_norm: float, m_norm: float, e_norm: float, w: WeightProfile) -> float:
    """Weighted sum of the three normalized criteria.

    Inputs are expected in [0, 1]; the result stays in [0, 1] whenever the
    weights sum to exactly 1.0 (and within 1e-9 of it otherwise). No clamping.
    """
    if not w.is_normalized():
        raise WeightsNotNormalized(math.fsum(w.as_tuple()))
    return math.fsum((d_norm * w.w_distance, m_norm * w.w_mobility, e_norm * w.w_energy))


def minmax_normalize(values: Sequence[float], invert: bool = False) -> list[float]:
    """Min-max scale values into [0, 1]; 1.0 for every entry when all are equal.

    invert flips the orientation (smallest raw value maps to 1.0), used for
    criteria where less is better.
    """
    if not values:
        return []
    lo, hi = min(values), max(values)
    if lo == hi:
        return [1.0] * len(values)
    span = hi - lo
    if invert:
        return [1.0 - (v - lo) / span for v in values]
    return [(v - lo) / span for v in values]


def normalize_candidates(
    raw: Sequence[tuple[int, float, float, float]],
) -> list[tuple[int, float, float, float]]:
    """Turn raw (node id, distance, mobility, energy) rows into scoring inputs.

    Distance and mobility are inverted (closer and steadier nodes score
    higher); energy is taken directly.
    """
    ids = [r[0] for r in raw]
    d = minmax_normalize([r[1] for r in raw], invert=True)
    m = minmax_normalize([r[2] for r in raw], invert=True)
    e = minmax_normalize([r[3] for r in raw])
    return list(zip(ids, d, m, e))
