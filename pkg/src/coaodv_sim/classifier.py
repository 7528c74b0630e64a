"""Weighted network-type classification and candidate ranking.

The dominant criterion weight labels the network class; the same weights feed
a composite score used to rank next-hop candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coopmath import composite_score
from .errors import AmbiguousProfile, WeightsNotNormalized
from .model import NetworkType, WeightProfile

_TYPE_BY_CRITERION = {
    "distance": NetworkType.DISTANCE_SENSITIVE,
    "mobility": NetworkType.MOBILITY_SENSITIVE,
    "energy": NetworkType.ENERGY_SENSITIVE,
}


@dataclass(frozen=True)
class ClassificationResult:
    network_type: NetworkType
    dominant_weight: str
    profile: WeightProfile


def classify_network(w: WeightProfile) -> ClassificationResult:
    """Label the network by the strictly largest weight; ties are an error."""
    if not w.is_normalized():
        raise WeightsNotNormalized(sum(w.as_tuple()))
    weights = dict(zip(("distance", "mobility", "energy"), w.as_tuple()))
    top = max(weights.values())
    dominant = [name for name, value in weights.items() if value == top]
    if len(dominant) != 1:
        raise AmbiguousProfile(w.as_tuple())
    return ClassificationResult(
        network_type=_TYPE_BY_CRITERION[dominant[0]],
        dominant_weight=dominant[0],
        profile=w,
    )


def rank_candidates(
    candidates: Sequence[tuple[int, float, float, float]], w: WeightProfile
) -> list[tuple[int, float]]:
    """Order (node id, d_norm, m_norm, e_norm) rows by descending composite
    score; equal scores rank by lowest node id."""
    scored = [
        (node_id, composite_score(d, m, e, w)) for node_id, d, m, e in candidates
    ]
    return sorted(scored, key=lambda item: (-item[1], item[0]))
