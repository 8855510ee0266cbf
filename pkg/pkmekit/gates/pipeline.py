from __future__ import annotations

from typing import List, Sequence, Tuple, Union

import numpy as np

from pkmekit.gates.controlled_op import ControlledOp, _check_op_fits, apply_controlled
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.tensor_core.unitary import UnitaryMatrix
from pkmekit.utilities.exceptions import DomainError

BranchFamily = Sequence[Union[UnitaryMatrix, np.ndarray]]


class Pipeline(object):
    """Controlled operations applied strictly in list order."""
    def __init__(self, operations: Sequence[ControlledOp]):
        for op in operations:
            if not isinstance(op, ControlledOp):
                raise DomainError(f'Pipelines hold ControlledOp instances, got {type(op).__name__}')
        self.operations: Tuple[ControlledOp, ...] = tuple(operations)

    def __len__(self):
        return len(self.operations)

    def __iter__(self):
        return iter(self.operations)

    def site_pairs(self) -> List[Tuple[int, int]]:
        return [(op.control, op.target) for op in self.operations]

    def inverse(self) -> Pipeline:
        return Pipeline([op.inverse() for op in reversed(self.operations)])

    def __repr__(self):
        return f'Pipeline({self.site_pairs()})'


def apply_pipeline(state: PureState, pipeline: Pipeline) -> PureState:
    # all positions are checked before the first op runs
    for op in pipeline:
        _check_op_fits(state, op)
    for op in pipeline:
        state = apply_controlled(state, op)
    return state


def chain_sites(k: int, odd: bool) -> List[Tuple[int, int]]:
    """
    Site pairs linking the second copy of the first block to the second copy of the second block:
    (k+1, k+2) ... (2k-1, 2k), (2k, 3k+1), (3k+1, 3k+2) ... (4k-1, 4k), plus (4k, 4k+1) onto the parity particle
    when odd.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f'k must be an integer >= 1, got {k!r}')
    path = list(range(k + 1, 2 * k + 1)) + list(range(3 * k + 1, 4 * k + 1))
    if odd:
        path.append(4 * k + 1)
    return list(zip(path[:-1], path[1:]))


# name -> (k fixed by the name or None if it must be passed, odd pattern, reversed action order)
PIPELINE_PATTERNS = {
    'even_4k': (None, False, False),
    'even_4k_reversed': (None, False, True),
    'odd_4k1': (None, True, False),
    'odd_4k1_reversed': (None, True, True),
    'eight_qudit_fig3': (2, False, False),
    'eight_qudit_fig4': (2, False, True),
    'five_qudit_fig7': (1, True, False),
    'five_qudit_fig8': (1, True, True),
}


def paper_pipeline(name: str, *branch_families: BranchFamily, k: int = None) -> Pipeline:
    """
    The j-th branch family U_j always belongs to the j-th site pair of the chain; the reversed variants only change
    the order in which the ops act. e.g. five_qudit_fig8 = [Lambda_45(U_2), Lambda_24(U_1)].

    Lists are in action order, the first op acts first. In the non-reversed chains each op is therefore controlled by
    a digit the previous op already rewrote: eight_qudit_fig3 yields |i,j,i,U_1(i,j),l,m,U_2(U_1(i,j),l),
    U_3(U_2(U_1(i,j),l),m)>, while eight_qudit_fig4 yields |i,j,i,U_1(i,j),l,m,U_2(j,l),U_3(l,m)>. The same holds for
    five_qudit_fig7 (nested) and five_qudit_fig8 (every control reads the input digit).
    """
    if name not in PIPELINE_PATTERNS:
        raise DomainError(f'Unknown pipeline {name!r}. Available: {sorted(PIPELINE_PATTERNS.keys())}')
    fixed_k, odd, reverse = PIPELINE_PATTERNS[name]
    if fixed_k is None:
        if k is None:
            raise DomainError(f'Pipeline {name} needs k')
    elif k is not None and k != fixed_k:
        raise DomainError(f'Pipeline {name} is defined for k={fixed_k}, got k={k}')
    else:
        k = fixed_k
    sites = chain_sites(k, odd)
    if len(branch_families) != len(sites):
        raise DomainError(f'Pipeline {name} with k={k} has {len(sites)} controlled operations and needs as many '
                          f'branch families, got {len(branch_families)}')
    ops = [ControlledOp(s, t, family) for (s, t), family in zip(sites, branch_families)]
    if reverse:
        ops = ops[::-1]
    return Pipeline(ops)
