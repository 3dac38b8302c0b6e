"""Generators: bit-exact RNG, permutations, sawtooth ramps."""

from collections import Counter

import pytest

import oracles
from hopsort import DatasetKind, DatasetSpec, Rng64, gen_kdistinct, gen_sawtooth, gen_shuffled


def test_rng_matches_published_stream_for_seed_zero():
    rng = Rng64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4
    assert rng.next() == 0x06C45D188009454F


def test_rng_agrees_with_independent_transcription():
    for seed in (0, 1, 2, 12345, 2**64 - 1):
        rng = Rng64(seed)
        assert [rng.next() for _ in range(8)] == oracles.splitmix64_stream(seed, 8)


def test_rng_streams_for_different_seeds_differ_immediately():
    a = Rng64(1)
    b = Rng64(2)
    assert all(a.next() != b.next() for _ in range(4))


def test_rng_same_seed_same_stream():
    a = [Rng64(99).next() for _ in range(5)]
    b = [Rng64(99).next() for _ in range(5)]
    assert a == b


def test_sawtooth_ramps():
    assert gen_sawtooth(6, 3) == [0, 1, 2, 0, 1, 2]
    assert gen_sawtooth(4, 1024) == [0, 1, 2, 3]
    assert gen_sawtooth(0, 5) == []


def test_sawtooth_rejects_bad_arguments():
    with pytest.raises(ValueError):
        gen_sawtooth(4, 0)
    with pytest.raises(ValueError):
        gen_sawtooth(-1, 4)


def test_shuffled_is_a_permutation():
    for n in (0, 1, 2, 17, 256):
        keys = gen_shuffled(n, seed=7)
        assert sorted(keys) == list(range(n))


def test_shuffled_is_deterministic_per_seed():
    assert gen_shuffled(100, 3) == gen_shuffled(100, 3)
    assert gen_shuffled(100, 3) != gen_shuffled(100, 4)


def test_kdistinct_keeps_the_sawtooth_multiset():
    keys = gen_kdistinct(100, 8, seed=5)
    assert Counter(keys) == Counter(gen_sawtooth(100, 8))
    assert len(set(keys)) == 8
    assert gen_kdistinct(100, 8, seed=5) == gen_kdistinct(100, 8, seed=5)


def test_kdistinct_with_k_at_least_n_is_a_plain_shuffle():
    assert len(set(gen_kdistinct(64, 1024, seed=1))) == 64


def test_dataset_spec_dispatch():
    assert DatasetSpec(DatasetKind.SAWTOOTH, 6, k=3).generate() == [0, 1, 2, 0, 1, 2]
    assert DatasetSpec(DatasetKind.SHUFFLED, 16, seed=2).generate() == gen_shuffled(16, 2)
    assert DatasetSpec(DatasetKind.KDISTINCT, 16, k=4, seed=2).generate() == gen_kdistinct(16, 4, 2)
