import numpy as np
import pytest

from addcirc import trace as logging
from addcirc.bits import (bit, controlled_indices, gray_path, hamming, is_power_of_two, mask_of, num_qubits_for_dim,
                          pair_family, to_bitstring)

logging.getLogger('addcirc').setLevel(logging.TRACE)


def test_power_of_two():
    assert is_power_of_two(1)
    assert is_power_of_two(2)
    assert is_power_of_two(8)
    assert not is_power_of_two(0)
    assert not is_power_of_two(3)
    assert not is_power_of_two(6)

    assert num_qubits_for_dim(1) == 0
    assert num_qubits_for_dim(8) == 3
    with pytest.raises(ValueError, match='power of two'):
        num_qubits_for_dim(6)


def test_bit_helpers():
    assert bit(6, 0) == 0
    assert bit(6, 1) == 1
    assert mask_of([0, 2]) == 5
    assert mask_of([]) == 0
    assert hamming(0b101, 0b011) == 2
    assert hamming(7, 7) == 0


def test_to_bitstring():
    # Highest qubit first.
    assert to_bitstring(6, 3) == '110'
    assert to_bitstring(1, 3) == '001'
    assert to_bitstring(0, 0) == ''


def test_controlled_indices():
    assert controlled_indices(3, [0, 1]).tolist() == [3, 7]
    assert controlled_indices(2, []).tolist() == [0, 1, 2, 3]


def test_pair_family():
    low, high = pair_family(2, (), 0)
    assert low.tolist() == [0, 2]
    assert high.tolist() == [1, 3]

    low, high = pair_family(2, (1,), 0)
    assert low.tolist() == [2]
    assert high.tolist() == [3]

    low, high = pair_family(3, (0, 1), 2)
    assert low.tolist() == [3]
    assert high.tolist() == [7]


def test_gray_path():
    assert gray_path(0, 3) == [0, 1, 3]
    assert gray_path(5, 5) == [5]

    rng = np.random.default_rng(7)
    for _ in range(20):
        a, b = [int(v) for v in rng.integers(0, 32, size=2)]
        path = gray_path(a, b)
        assert path[0] == a
        assert path[-1] == b
        assert len(path) == hamming(a, b) + 1
        assert all(hamming(x, y) == 1 for x, y in zip(path[:-1], path[1:]))
