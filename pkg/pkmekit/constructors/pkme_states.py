"""
Closed-form planar two-region maximally entangled states. All of them are uniform superpositions over a set of
distinct computational kets, built by listing the kets and normalizing explicitly.
"""
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from pkmekit.tensor_core.indexing import basis_index, check_capacity
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.utilities.exceptions import DomainError


def _check_int(name: str, value: int, minimum: int):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise DomainError(f'{name} must be an integer >= {minimum}, got {value!r}')


def uniform_superposition(n: int, d: int, kets: Iterable[Sequence[int]]) -> PureState:
    check_capacity(n, d)
    amplitudes = np.zeros(d ** n, dtype=np.complex128)
    for digits in kets:
        if len(digits) != n:
            raise DomainError(f'Ket {tuple(digits)} does not have {n} digits')
        amplitudes[basis_index(digits, d)] += 1
    return PureState.from_unnormalized(n, d, amplitudes)


def _bit_blocks(bits: Sequence[int], k: int):
    return [tuple(bits[t * k:(t + 1) * k]) for t in range(len(bits) // k)]


def pkme_4k(k: int, d: int) -> PureState:
    """
    (1/d^k) sum |x, x, y, y> over k-digit tuples x and y, in circle position order. Every digit runs over
    0..d-1.
    """
    _check_int('k', k, 1)
    _check_int('d', d, 2)
    check_capacity(4 * k, d)
    kets = (x + x + y + y for x in product(range(d), repeat=k) for y in product(range(d), repeat=k))
    return uniform_superposition(4 * k, d, kets)


def pkme_6qubit() -> PureState:
    kets = ((i, i ^ j, j, l, j ^ l, i ^ j ^ l) for i, j, l in product(range(2), repeat=3))
    return uniform_superposition(6, 2, kets)


def pkme_5(d: int) -> PureState:
    """(1/d) sum |i, i, j, j, i+j mod d>."""
    _check_int('d', d, 2)
    kets = ((i, i, j, j, (i + j) % d) for i, j in product(range(d), repeat=2))
    return uniform_superposition(5, d, kets)


def pkme_4k1(k: int) -> PureState:
    """Qubits only: pkme_4k(k, 2) with one extra particle carrying the parity of all 2k free bits."""
    _check_int('k', k, 1)
    check_capacity(4 * k + 1, 2)
    kets = []
    for bits in product(range(2), repeat=2 * k):
        x, y = bits[:k], bits[k:]
        kets.append(x + x + y + y + (sum(bits) % 2,))
    return uniform_superposition(4 * k + 1, 2, kets)


def pkme_7() -> PureState:
    kets = ((i, j, l, j, l, i, i ^ j ^ l) for i, j, l in product(range(2), repeat=3))
    return uniform_superposition(7, 2, kets)


def general_2mk(m: int, k: int) -> PureState:
    """Qubits: m free k-bit blocks, each written twice in a row, |x_1 x_1 x_2 x_2 ... x_m x_m>."""
    _check_int('m', m, 1)
    _check_int('k', k, 1)
    check_capacity(2 * m * k, 2)
    kets = []
    for bits in product(range(2), repeat=m * k):
        kets.append(tuple(b for block in _bit_blocks(bits, k) for b in block + block))
    return uniform_superposition(2 * m * k, 2, kets)


def general_2mk1(m: int, k: int) -> PureState:
    """general_2mk(m, k) with a trailing qubit holding the parity of all m*k free bits."""
    _check_int('m', m, 1)
    _check_int('k', k, 1)
    check_capacity(2 * m * k + 1, 2)
    kets = []
    for bits in product(range(2), repeat=m * k):
        body = tuple(b for block in _bit_blocks(bits, k) for b in block + block)
        kets.append(body + (sum(bits) % 2,))
    return uniform_superposition(2 * m * k + 1, 2, kets)
