import random

import pytest

from coaodv_sim.classifier import classify_network, rank_candidates
from coaodv_sim.errors import AmbiguousProfile, WeightsNotNormalized
from coaodv_sim.model import CANONICAL_PROFILES, NetworkType, WeightProfile


@pytest.mark.parametrize(
    "weights, expected",
    [
        ((0.5, 0.25, 0.25), NetworkType.DISTANCE_SENSITIVE),
        ((0.25, 0.5, 0.25), NetworkType.MOBILITY_SENSITIVE),
        ((0.25, 0.25, 0.5), NetworkType.ENERGY_SENSITIVE),
    ],
)
def test_canonical_profiles_map_to_their_network_type(weights, expected):
    result = classify_network(WeightProfile(*weights))
    assert result.network_type is expected


def test_dominant_weight_names_the_criterion():
    result = classify_network(WeightProfile(0.25, 0.5, 0.25))
    assert result.dominant_weight == "mobility"
    assert result.profile == WeightProfile(0.25, 0.5, 0.25)


def test_non_canonical_profile_classified_by_argmax():
    result = classify_network(WeightProfile(0.4, 0.35, 0.25))
    assert result.network_type is NetworkType.DISTANCE_SENSITIVE
    assert not result.profile.is_canonical()


def test_tied_maximum_is_ambiguous():
    with pytest.raises(AmbiguousProfile):
        classify_network(WeightProfile(0.4, 0.4, 0.2))


def test_unnormalized_weights_rejected():
    with pytest.raises(WeightsNotNormalized):
        classify_network(WeightProfile(0.6, 0.3, 0.2))


def test_classification_invariant_under_rescaling():
    rng = random.Random(11)
    for _ in range(200):
        raw = sorted(rng.uniform(0.01, 1.0) for _ in range(3))
        if raw[2] - raw[1] < 1e-6:
            continue  # keep a clear strict maximum
        rng.shuffle(raw)
        total = sum(raw)
        base = WeightProfile(*(v / total for v in raw))
        scaled_total = sum(v * 3.7 for v in raw)
        rescaled = WeightProfile(*((v * 3.7) / scaled_total for v in raw))
        assert classify_network(base).network_type is classify_network(rescaled).network_type


def test_permuting_weight_roles_permutes_the_type():
    w1, w2, w3 = 0.5, 0.3, 0.2
    assert classify_network(WeightProfile(w1, w2, w3)).network_type is NetworkType.DISTANCE_SENSITIVE
    assert classify_network(WeightProfile(w3, w1, w2)).network_type is NetworkType.MOBILITY_SENSITIVE
    assert classify_network(WeightProfile(w2, w3, w1)).network_type is NetworkType.ENERGY_SENSITIVE


def test_rank_extremes():
    for profile in CANONICAL_PROFILES:
        ranked = rank_candidates([(1, 1, 1, 1), (2, 0, 0, 0)], profile)
        assert ranked == [(1, 1.0), (2, 0.0)]


def test_rank_single_candidate():
    ranked = rank_candidates([(4, 0.5, 0.5, 0.5)], WeightProfile(0.5, 0.25, 0.25))
    assert ranked == [(4, 0.5)]


def test_rank_by_dominant_criterion():
    ranked = rank_candidates([(1, 1, 0, 0), (2, 0, 1, 0)], WeightProfile(0.5, 0.25, 0.25))
    assert ranked == [(1, 0.5), (2, 0.25)]


def test_rank_ties_break_by_lowest_id():
    ranked = rank_candidates([(9, 1, 0, 0), (3, 0, 0, 1), (5, 0, 1, 0)], WeightProfile(0.25, 0.5, 0.25))
    assert [node_id for node_id, _ in ranked] == [5, 3, 9]
    assert ranked[1][1] == ranked[2][1] == 0.25


def test_dominated_candidate_never_ranks_above():
    rng = random.Random(23)
    for _ in range(200):
        a = (1, rng.random(), rng.random(), rng.random())
        b = (2, a[1] * rng.random(), a[2] * rng.random(), a[3] * rng.random())
        raw = sorted((rng.uniform(0.05, 1.0) for _ in range(3)), reverse=True)
        total = sum(raw)
        profile = WeightProfile(*(v / total for v in raw))
        ranked = rank_candidates([a, b], profile)
        assert ranked[0][0] == 1
