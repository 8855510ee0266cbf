from itertools import product
from typing import Sequence

import numpy as np

from pkmekit.constructors.pkme_states import _check_int, uniform_superposition
from pkmekit.tensor_core.indexing import basis_index, check_capacity
from pkmekit.tensor_core.pure_state import PureState


def ghz(n: int, d: int) -> PureState:
    _check_int('n', n, 2)
    _check_int('d', d, 2)
    check_capacity(n, d)
    return uniform_superposition(n, d, ((i,) * n for i in range(d)))


def product_state(digits: Sequence[int], d: int) -> PureState:
    n = len(digits)
    check_capacity(n, d)
    amplitudes = np.zeros(d ** n, dtype=np.complex128)
    amplitudes[basis_index(digits, d)] = 1
    return PureState(n, d, amplitudes)


def ame5_fixture() -> PureState:
    """
    Graph state of the 5-cycle: amplitude (-1)^(x1 x2 + x2 x3 + x3 x4 + x4 x5 + x5 x1) / sqrt(32). Every cut of the
    pentagon into 2 + 3 vertices has cut rank 2, so all ten two-qubit marginals are I/4.
    """
    amplitudes = np.zeros(32, dtype=np.complex128)
    for x in product(range(2), repeat=5):
        edges = sum(x[i] * x[(i + 1) % 5] for i in range(5))
        amplitudes[basis_index(x, 2)] = (-1) ** edges
    return PureState.from_unnormalized(5, 2, amplitudes)
