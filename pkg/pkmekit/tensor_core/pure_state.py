from __future__ import annotations

from typing import Sequence

import numpy as np

from pkmekit.configuration import algebraic_tolerance
from pkmekit.tensor_core.indexing import basis_index, check_capacity
from pkmekit.tensor_core.unitary import RngState
from pkmekit.utilities.exceptions import DomainError


class PureState(object):
    """
    Normalized state vector of n qudits with local dimension d, stored densely as complex128 in basis_index order.
    Instances are read-only: the amplitude buffer is flagged non-writeable and every transformation returns a new
    PureState.
    """
    def __init__(self, n: int, d: int, amplitudes, atol: float = algebraic_tolerance):
        check_capacity(n, d)
        amplitudes = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        if amplitudes.size != d ** n:
            raise DomainError(f'A state of n={n} particles with d={d} needs d^n = {d ** n} amplitudes, '
                              f'got {amplitudes.size}')
        norm = float(np.linalg.norm(amplitudes))
        if not abs(norm - 1) <= atol:
            raise DomainError(f'State vector is not normalized: norm is {norm!r}, allowed deviation from 1 is {atol}')
        amplitudes.flags.writeable = False
        self._n = n
        self._d = d
        self._amplitudes = amplitudes

    @classmethod
    def from_unnormalized(cls, n: int, d: int, amplitudes) -> PureState:
        amplitudes = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise DomainError('Cannot normalize the zero vector')
        return cls(n, d, amplitudes / norm)

    @property
    def n(self) -> int:
        return self._n

    @property
    def d(self) -> int:
        return self._d

    @property
    def dim(self) -> int:
        return self._amplitudes.size

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    def tensor(self) -> np.ndarray:
        # view with one axis per particle, axis p - 1 is particle p
        return self._amplitudes.reshape((self._d,) * self._n)

    def amplitude(self, digits: Sequence[int]) -> complex:
        if len(digits) != self._n:
            raise DomainError(f'Expected {self._n} digits, got {len(digits)}')
        return complex(self._amplitudes[basis_index(digits, self._d)])

    def norm(self) -> float:
        return float(np.linalg.norm(self._amplitudes))

    def distance(self, other: PureState) -> float:
        _check_same_register(self, other)
        return float(np.linalg.norm(self._amplitudes - other.amplitudes))

    def __repr__(self):
        return f'PureState(n={self._n}, d={self._d})'


def _check_same_register(a: PureState, b: PureState):
    if a.n != b.n or a.d != b.d:
        raise DomainError(f'States live on different registers: (n={a.n}, d={a.d}) vs (n={b.n}, d={b.d})')


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b>, conjugate-linear in a."""
    _check_same_register(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def random_state(n: int, d: int, rng: RngState) -> PureState:
    check_capacity(n, d)
    return PureState.from_unnormalized(n, d, rng.standard_complex_normal(d ** n))
