"""
Four-qubit PKME families parameterized by a unitary V in the canonical gauge (the Schmidt-basis reduction that
zeroes the single-excitation amplitudes is assumed, not performed).

The amplitudes are tabulated with kets grouped as (1,3 | 2,4): a tabulated ket |abcd> means particle 1 = a,
particle 3 = b, particle 2 = c, particle 4 = d. Emitted states are in circle position order, so digits 2 and 3 are
swapped on the way out.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from pkmekit.tensor_core.indexing import basis_index
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.tensor_core.unitary import RngState, UnitaryMatrix, as_unitary, haar_random_unitary
from pkmekit.utilities.exceptions import DomainError

FAMILY_CASES = ('prime', 'double_prime', 'zero')


@dataclass(frozen=True)
class FamilyParams4Qubit:
    """
    prime: `unitary` is the 3x3 block [[c, e, f], [g, h, p], [r, w, y]] (case b = 0).
    double_prime: `inner` = [[c, e], [g, h]] and `outer` = [[a, b], [q, y]] (case b != 0).
    zero: `inner` only, the intersection of both families.
    """
    case: str
    unitary: Optional[UnitaryMatrix] = None
    inner: Optional[UnitaryMatrix] = None
    outer: Optional[UnitaryMatrix] = None

    def __post_init__(self):
        if self.case not in FAMILY_CASES:
            raise DomainError(f'Unknown four-qubit family case {self.case!r}. Choose from {FAMILY_CASES}')
        expected = {'prime': {'unitary': 3},
                    'double_prime': {'inner': 2, 'outer': 2},
                    'zero': {'inner': 2}}[self.case]
        for field_name in ('unitary', 'inner', 'outer'):
            value = getattr(self, field_name)
            if field_name not in expected:
                if value is not None:
                    raise DomainError(f'Case {self.case} does not take a {field_name} matrix')
                continue
            if value is None:
                raise DomainError(f'Case {self.case} needs a {expected[field_name]}x{expected[field_name]} '
                                  f'{field_name} matrix')
            value = as_unitary(value)
            if value.dim != expected[field_name]:
                raise DomainError(f'{field_name} matrix of case {self.case} must be {expected[field_name]}x'
                                  f'{expected[field_name]}, got {value.dim}x{value.dim}')
            object.__setattr__(self, field_name, value)


def grouped_to_position_order(digits: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
    x1, x3, x2, x4 = digits
    return x1, x2, x3, x4


def _grouped_amplitudes(params: FamilyParams4Qubit) -> Dict[str, complex]:
    if params.case == 'prime':
        (c, e, f), (g, h, p), (r, w, y) = params.unitary.entries
        return {'0000': 1, '0101': c, '0110': g, '0111': r, '1001': e, '1010': h, '1011': w, '1101': f,
                '1110': p, '1111': y}
    (c, e), (g, h) = params.inner.entries
    if params.case == 'double_prime':
        (a, b), (q, y) = params.outer.entries
    else:
        a, b, q, y = 1, 0, 0, 1
    return {'0000': a, '0011': q, '1100': b, '1111': y, '0101': c, '0110': g, '1001': e, '1010': h}


def four_qubit_family(params: FamilyParams4Qubit) -> PureState:
    amplitudes = np.zeros(16, dtype=np.complex128)
    for ket, value in _grouped_amplitudes(params).items():
        digits = grouped_to_position_order(tuple(int(ch) for ch in ket))
        amplitudes[basis_index(digits, 2)] = value / 2
    return PureState(4, 2, amplitudes)


def random_family_params(case: str, rng: RngState) -> FamilyParams4Qubit:
    if case == 'prime':
        return FamilyParams4Qubit('prime', unitary=haar_random_unitary(3, rng))
    if case == 'double_prime':
        return FamilyParams4Qubit('double_prime', inner=haar_random_unitary(2, rng), outer=haar_random_unitary(2, rng))
    if case == 'zero':
        return FamilyParams4Qubit('zero', inner=haar_random_unitary(2, rng))
    raise DomainError(f'Unknown four-qubit family case {case!r}. Choose from {FAMILY_CASES}')
