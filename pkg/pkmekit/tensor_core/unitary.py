from __future__ import annotations

from typing import Tuple, Union

import numpy as np
from scipy.linalg import qr

from pkmekit.configuration import unitarity_tolerance
from pkmekit.utilities.exceptions import DomainError


def unitarity_error(matrix: np.ndarray) -> float:
    matrix = np.asarray(matrix)
    return float(np.linalg.norm(matrix.conj().T @ matrix - np.eye(matrix.shape[0])))


class UnitaryMatrix(object):
    def __init__(self, entries, atol: float = unitarity_tolerance):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] < 1:
            raise DomainError(f'A unitary must be a nonempty square matrix, got shape {entries.shape}')
        err = unitarity_error(entries)
        if not err <= atol:
            raise DomainError(f'Matrix is not unitary: ||U^dagger U - I||_F = {err:.3e} exceeds tolerance {atol}')
        entries.flags.writeable = False
        self._entries = entries

    @classmethod
    def identity(cls, dim: int) -> UnitaryMatrix:
        return cls(np.eye(dim))

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def dagger(self) -> UnitaryMatrix:
        return UnitaryMatrix(self._entries.conj().T)

    def __repr__(self):
        return f'UnitaryMatrix(dim={self.dim})'


def as_unitary(u: Union[UnitaryMatrix, np.ndarray], atol: float = unitarity_tolerance) -> UnitaryMatrix:
    if isinstance(u, UnitaryMatrix):
        return u
    return UnitaryMatrix(u, atol=atol)


class RngState(object):
    """
    Seeded random source (PCG64). Single owner: every draw advances the stream and bumps the draw counter, so two
    RngStates built from the same seed produce the same sequence as long as they are asked the same questions.
    """
    def __init__(self, seed: int):
        if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < 2 ** 64:
            raise DomainError(f'Seed must be an integer in [0, 2^64), got {seed!r}')
        self.seed = int(seed)
        self.draws = 0
        self._generator = np.random.default_rng(self.seed)

    def standard_complex_normal(self, shape: Union[int, Tuple[int, ...]]) -> np.ndarray:
        self.draws += 1
        re = self._generator.standard_normal(shape)
        im = self._generator.standard_normal(shape)
        return (re + 1j * im) / np.sqrt(2)

    def __repr__(self):
        return f'RngState(seed={self.seed}, draws={self.draws})'


def haar_random_unitary(dim: int, rng: RngState) -> UnitaryMatrix:
    """
    QR of a complex Ginibre matrix. Column phases are fixed so that R has a positive real diagonal, otherwise the
    distribution of Q is not Haar.
    """
    if isinstance(dim, bool) or int(dim) != dim or dim < 1:
        raise DomainError(f'dim must be an integer >= 1, got {dim!r}')
    z = rng.standard_complex_normal((dim, dim))
    q, r = qr(z)
    diag = np.diagonal(r)
    q = q * (diag / np.abs(diag))
    return UnitaryMatrix(q)
