from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from pkmekit.configuration import unitarity_tolerance
from pkmekit.tensor_core.indexing import check_positions
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.tensor_core.unitary import UnitaryMatrix, as_unitary
from pkmekit.utilities.exceptions import DomainError


class ControlledOp(object):
    """
    Controlled operation with control particle `control` and target particle `target`: |i>_s |j>_t maps to
    |i>_s U_i|j>_t, where U_i = branches[i]. There is one branch per control digit, so d branches of dimension d.
    """
    def __init__(self, control: int, target: int, branches: Sequence[Union[UnitaryMatrix, np.ndarray]],
                 atol: float = unitarity_tolerance):
        for name, p in (('control', control), ('target', target)):
            if isinstance(p, bool) or int(p) != p or p < 1:
                raise DomainError(f'{name} position must be an integer >= 1, got {p!r}')
        if control == target:
            raise DomainError(f'Control and target must differ, both are {control}')
        branches = tuple(as_unitary(b, atol=atol) for b in branches)
        d = len(branches)
        if d < 2:
            raise DomainError(f'A controlled operation needs one branch per control digit (d >= 2), got {d}')
        bad = [b.dim for b in branches if b.dim != d]
        if len(bad) > 0:
            raise DomainError(f'With {d} branches every branch must be {d}x{d}, got dimensions {bad}')
        self.control = int(control)
        self.target = int(target)
        self.branches = branches
        self._branch_tensor = np.stack([b.entries for b in branches])  # [i, out, in]
        self._branch_tensor.flags.writeable = False

    @classmethod
    def local(cls, control: int, target: int, unitary: Union[UnitaryMatrix, np.ndarray]) -> ControlledOp:
        """Every branch equal: the control is idle and the op is a single-particle unitary on target."""
        unitary = as_unitary(unitary)
        return cls(control, target, [unitary] * unitary.dim)

    @property
    def d(self) -> int:
        return len(self.branches)

    @property
    def branch_tensor(self) -> np.ndarray:
        return self._branch_tensor

    def inverse(self) -> ControlledOp:
        # the control digit is untouched, so inverting every branch inverts the op
        return ControlledOp(self.control, self.target, [b.dagger() for b in self.branches])

    def __repr__(self):
        return f'ControlledOp(control={self.control}, target={self.target}, d={self.d})'


def _check_op_fits(state: PureState, op: ControlledOp):
    for name, p in (('control', op.control), ('target', op.target)):
        if p > state.n:
            raise DomainError(f'{name} position {p} of {op!r} is outside 1..{state.n}')
    if op.d != state.d:
        raise DomainError(f'{op!r} has {op.d}-dimensional branches but the state has d={state.d}')


def apply_controlled(state: PureState, op: ControlledOp) -> PureState:
    """
    Moves the control and target axes to the front and contracts every control slice with its own branch in one
    einsum, so no d^2 x d^2 matrix is ever built. Cost O(d^(n+1)).
    """
    _check_op_fits(state, op)
    axes = (op.control - 1, op.target - 1)
    psi = np.moveaxis(state.tensor(), axes, (0, 1))
    out = np.einsum('iab,ib...->ia...', op.branch_tensor, psi)
    out = np.moveaxis(out, (0, 1), axes)
    return PureState(state.n, state.d, out.reshape(-1))


def apply_local_unitary(state: PureState, position: int, unitary: Union[UnitaryMatrix, np.ndarray]) -> PureState:
    unitary = as_unitary(unitary)
    position = check_positions([position], state.n, what='position')[0]
    if unitary.dim != state.d:
        raise DomainError(f'Unitary of dimension {unitary.dim} does not act on qudits with d={state.d}')
    axis = position - 1
    out = np.tensordot(unitary.entries, state.tensor(), axes=([1], [axis]))
    out = np.moveaxis(out, 0, axis)
    return PureState(state.n, state.d, out.reshape(-1))
