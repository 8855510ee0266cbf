from dataclasses import dataclass
from typing import List, Tuple

from pkmekit.utilities.exceptions import DomainError


@dataclass(frozen=True)
class StructureSpec:
    """
    Part sizes of a planar two-region structure on n particles: region A (floor(n/2) particles) is split into m arcs
    with sizes a_sizes, region B (the rest) into m arcs with sizes b_sizes. Sizes are multisets and are stored sorted.
    """
    n: int
    a_sizes: Tuple[int, ...]
    b_sizes: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'a_sizes', tuple(sorted(self.a_sizes)))
        object.__setattr__(self, 'b_sizes', tuple(sorted(self.b_sizes)))
        self._sanity_check()

    def _sanity_check(self):
        n = self.n
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise DomainError(f'n must be a positive integer, got {n!r}')
        for name, sizes in (('a_sizes', self.a_sizes), ('b_sizes', self.b_sizes)):
            for s in sizes:
                if isinstance(s, bool) or not isinstance(s, int) or s < 1:
                    raise DomainError(f'Every part must hold at least one particle, but {name} = {sizes} contains '
                                      f'{s!r}')
        if len(self.a_sizes) != len(self.b_sizes):
            raise DomainError(f'Region A and region B need the same number of parts m, got {len(self.a_sizes)} '
                              f'A parts and {len(self.b_sizes)} B parts')
        if sum(self.a_sizes) != n // 2:
            raise DomainError(f'Region A must hold floor(n/2) = {n // 2} particles, but a_sizes = {self.a_sizes} '
                              f'sum to {sum(self.a_sizes)}')
        if sum(self.b_sizes) != n - n // 2:
            raise DomainError(f'Region B must hold n - floor(n/2) = {n - n // 2} particles, but b_sizes = '
                              f'{self.b_sizes} sum to {sum(self.b_sizes)}')
        if self.m < 2:
            raise DomainError(f'Each region needs m >= 2 parts, got m = {self.m}')
        if 2 * self.m > n:
            raise DomainError(f'2m = {2 * self.m} parts do not fit on n = {n} particles')

    @property
    def m(self) -> int:
        return len(self.a_sizes)

    def __str__(self):
        return f'n={self.n}, A sizes {list(self.a_sizes)}, B sizes {list(self.b_sizes)}'


def four_partite_spec(n: int, k: int) -> StructureSpec:
    """A = {k, floor(n/2) - k}, B = {k, n - floor(n/2) - k}. One part of each region has exactly k particles."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f'n must be a positive integer, got {n!r}')
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f'k must be an integer >= 1, got {k!r} (parts A1 and B1 would be empty)')
    half = n // 2
    if half - k < 1:
        raise DomainError(f'Part A2 would be empty: floor(n/2) - k = {half} - {k} = {half - k} for n={n}, k={k}')
    if n - half - k < 1:
        raise DomainError(f'Part B2 would be empty: n - floor(n/2) - k = {n - half - k} for n={n}, k={k}')
    return StructureSpec(n, (k, half - k), (k, n - half - k))


def valid_four_partite_ks(n: int) -> List[int]:
    return [k for k in range(1, n // 2) if n - n // 2 - k >= 1]


def general_2m_spec(m: int, k: int, odd: bool = False) -> StructureSpec:
    """
    Spec of the duplicated-block states on 2mk (+1) particles: every part has k particles, except that with odd=True
    one B part takes the extra parity particle.
    """
    if m < 2 or k < 1:
        raise DomainError(f'general_2m_spec needs m >= 2 and k >= 1, got m={m}, k={k}')
    b_sizes = (k,) * (m - 1) + ((k + 1) if odd else k,)
    return StructureSpec(2 * m * k + int(odd), (k,) * m, b_sizes)
