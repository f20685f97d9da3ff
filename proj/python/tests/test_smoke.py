import random

import pytest

import sparse_ssa

TEXT = b"abracadabrarabia"
POSITIONS = [1, 3, 8, 10, 11, 13]
SSA = [13, 1, 8, 11, 3, 10]
SLCP = [0, 2, 4, 1, 0, 2]


def test_running_example():
    assert sparse_ssa.main_algo(TEXT, POSITIONS) == (SSA, SLCP)
    ssa, slcp, stats = sparse_ssa.parameterized_algo(TEXT, POSITIONS)
    assert (ssa, slcp) == (SSA, SLCP)
    assert stats["ell"] == 3
    assert stats["b_prime"] == 2
    assert stats["resorted_ranks"] == [2, 3]
    assert sparse_ssa.naive_ssa_slcp(TEXT, POSITIONS) == (SSA, SLCP)


def test_random_instances_agree_with_oracle():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 400)
        text = bytes(rng.choice(b"ab") for _ in range(n))
        positions = sparse_ssa.sample_positions(n, rng.randint(1, n), rng.randint(0, 1 << 30))
        expected = sparse_ssa.naive_ssa_slcp(text, positions)
        assert sparse_ssa.main_algo(text, positions, seed=rng.randint(0, 99)) == expected
        ssa, slcp, _ = sparse_ssa.parameterized_algo(text, positions)
        assert (ssa, slcp) == expected


def test_b_prime_and_fingerprint():
    assert sparse_ssa.compute_b_prime(SLCP, 3) == 2
    assert sparse_ssa.compute_b_prime([0, 5, 5], 5) == 3
    a = sparse_ssa.fingerprint(TEXT, 1, 4, s=4, seed=9)
    b = sparse_ssa.fingerprint(TEXT, 8, 4, s=4, seed=9)
    assert a == b
    value, window, _ = sparse_ssa.fingerprint(TEXT, 14, 5)
    assert window == 3


def test_validation_errors():
    with pytest.raises(ValueError):
        sparse_ssa.main_algo(TEXT, [5, 5])
    with pytest.raises(ValueError):
        sparse_ssa.main_algo(TEXT, [0])
    with pytest.raises(ValueError):
        sparse_ssa.main_algo(b"", [1])
    with pytest.raises(ValueError):
        sparse_ssa.sample_positions(5, 6, 1)
