"""!
@brief Bitstring helpers.

Basis indices use the Little Endian convention: bit q of an index is the state of qubit q, so the index of
|b_{n-1}...b_1 b_0> is sum(b_q * 2^q).
"""
from typing import Iterable, List, Tuple

import numpy as np


def is_power_of_two(value: int) -> bool:
    return value > 0 and (value & (value - 1)) == 0


def num_qubits_for_dim(dim: int) -> int:
    if not is_power_of_two(dim):
        raise ValueError('dimension must be a power of two, got %d.' % dim)
    return dim.bit_length() - 1


def bit(index: int, q: int) -> int:
    return (index >> q) & 1


def mask_of(qubits: Iterable[int]) -> int:
    mask = 0
    for q in qubits:
        mask |= 1 << q
    return mask


def hamming(a: int, b: int) -> int:
    return bin(a ^ b).count('1')


def to_bitstring(index: int, n: int) -> str:
    """!
    @brief Render an index as |b_{n-1}...b_0>, most significant (highest) qubit first.
    """
    return format(index, '0%db' % n) if n > 0 else ''


def controlled_indices(n: int, controls: Iterable[int]) -> np.ndarray:
    """!
    @brief All basis indices in [0, 2^n) whose control bits are all set.
    """
    mask = mask_of(controls)
    indices = np.arange(1 << n)
    return indices[(indices & mask) == mask]


def pair_family(n: int, controls: Iterable[int], target: int) -> Tuple[np.ndarray, np.ndarray]:
    """!
    @brief Index pairs acted on by a (multi-)controlled single-qubit gate.

    @return A tuple `(low, high)` of index arrays: `low` has the target bit clear and every control bit set,
            `high = low + 2^target`.
    """
    indices = controlled_indices(n, controls)
    low = indices[(indices >> target) & 1 == 0]
    return low, low + (1 << target)


def gray_path(a: int, b: int) -> List[int]:
    """!
    @brief A shortest path between two bitstrings on the hypercube, flipping differing bits lowest first.

    Every consecutive pair of codewords in the result differs in exactly one bit.
    """
    path = [a]
    current = a
    diff = a ^ b
    q = 0
    while diff:
        if diff & 1:
            current ^= 1 << q
            path.append(current)
        diff >>= 1
        q += 1
    return path
