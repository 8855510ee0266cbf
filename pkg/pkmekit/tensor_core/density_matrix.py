from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from pkmekit.configuration import algebraic_tolerance, max_eigendecomposition_dim, psd_tolerance
from pkmekit.tensor_core.indexing import check_positions
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.utilities.exceptions import DomainError


class DensityMatrix(object):
    """
    Reduced state of the particles in `positions`. Rows and columns are indexed by the digits of those particles in
    the given order (first listed particle = most significant digit).
    """
    def __init__(self, positions: Sequence[int], d: int, entries):
        positions = tuple(int(p) for p in positions)
        if len(positions) == 0 or len(set(positions)) != len(positions):
            raise DomainError(f'DensityMatrix positions must be nonempty and distinct, got {positions}')
        entries = np.array(entries, dtype=np.complex128)
        dim = d ** len(positions)
        if entries.shape != (dim, dim):
            raise DomainError(f'Expected a {dim}x{dim} matrix for k={len(positions)}, d={d}, got {entries.shape}')
        self._positions = positions
        self._d = d
        self._sanity_check(entries)
        entries.flags.writeable = False
        self._entries = entries

    @staticmethod
    def _sanity_check(entries: np.ndarray):
        herm = float(np.max(np.abs(entries - entries.conj().T)))
        if herm > algebraic_tolerance:
            raise DomainError(f'Density matrix is not Hermitian: max|rho - rho^dagger| = {herm:.3e}')
        tr = complex(np.trace(entries))
        if abs(tr - 1) > algebraic_tolerance:
            raise DomainError(f'Density matrix trace is {tr}, expected 1')
        # no eigenvalue check above max_eigendecomposition_dim
        if entries.shape[0] <= max_eigendecomposition_dim:
            smallest = float(np.min(np.linalg.eigvalsh(entries)))
            if smallest < -psd_tolerance:
                raise DomainError(f'Density matrix is not positive semidefinite: smallest eigenvalue {smallest:.3e}')

    @classmethod
    def maximally_mixed(cls, positions: Sequence[int], d: int) -> DensityMatrix:
        dim = d ** len(positions)
        return cls(positions, d, np.eye(dim) / dim)

    @property
    def positions(self) -> Tuple[int, ...]:
        return self._positions

    @property
    def k(self) -> int:
        return len(self._positions)

    @property
    def d(self) -> int:
        return self._d

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def partial_trace(self, keep: Sequence[int]) -> DensityMatrix:
        """Traces out every retained particle not in keep. keep uses the original particle labels."""
        keep = check_positions(keep, max(self._positions), what='keep')
        missing = [p for p in keep if p not in self._positions]
        if len(missing) > 0:
            raise DomainError(f'Positions {missing} are not retained by this density matrix {self._positions}')
        k = self.k
        kept_axes = [self._positions.index(p) for p in keep]
        traced_axes = [i for i in range(k) if i not in kept_axes]
        d_keep = self._d ** len(kept_axes)
        d_traced = self._d ** len(traced_axes)
        t = self._entries.reshape((self._d,) * (2 * k))
        t = t.transpose(kept_axes + traced_axes + [k + i for i in kept_axes] + [k + i for i in traced_axes])
        t = t.reshape(d_keep, d_traced, d_keep, d_traced)
        return DensityMatrix(keep, self._d, np.trace(t, axis1=1, axis2=3))

    def __repr__(self):
        return f'DensityMatrix(positions={self._positions}, d={self._d})'


def partial_trace(state: PureState, keep: Sequence[int]) -> DensityMatrix:
    """
    rho_keep = Tr_complement |psi><psi|. The kept axes are moved to the front, the tensor is flattened into a
    d^k x d^(n-k) matrix M and rho = M M^dagger / <psi|psi>. Dividing by the norm keeps the trace at 1 for
    states built within the normalization slack.
    """
    keep = check_positions(keep, state.n, what='keep')
    kept_axes = [p - 1 for p in keep]
    traced_axes = [a for a in range(state.n) if a not in kept_axes]
    m = np.transpose(state.tensor(), kept_axes + traced_axes).reshape(state.d ** len(keep), -1)
    rho = m @ m.conj().T
    return DensityMatrix(keep, state.d, rho / np.real(np.trace(rho)))


def deviation_from_maximally_mixed(rho: DensityMatrix) -> float:
    """Frobenius distance ||rho - I/d^k||_F."""
    return float(np.linalg.norm(rho.entries - np.eye(rho.dim) / rho.dim))
