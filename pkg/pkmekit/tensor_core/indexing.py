from typing import Iterable, Sequence, Tuple

from pkmekit.configuration import max_amplitudes
from pkmekit.utilities.exceptions import CapacityError, DomainError


def check_register(n: int, d: int):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f'Particle count n must be an integer >= 1, got {n!r}')
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise DomainError(f'Local dimension d must be an integer >= 2, got {d!r}')


def check_capacity(n: int, d: int):
    check_register(n, d)
    # d >= 2, so anything past bit_length particles is over capacity without evaluating d ** n
    if n > max_amplitudes.bit_length() or d ** n > max_amplitudes:
        raise CapacityError(f'A register of n={n} particles with local dimension d={d} needs d^n = {d}^{n} '
                            f'amplitudes, which exceeds the capacity limit of {max_amplitudes}.')


def basis_index(digits: Sequence[int], d: int) -> int:
    """
    Flat index of the computational basis ket |digits[0], digits[1], ...>. Particle 1 is the most significant
    base-d digit.
    """
    if len(digits) == 0:
        raise DomainError('basis_index needs at least one digit')
    if not isinstance(d, int) or d < 2:
        raise DomainError(f'Local dimension d must be an integer >= 2, got {d!r}')
    index = 0
    for p, x in enumerate(digits):
        if isinstance(x, bool) or int(x) != x or not 0 <= x < d:
            raise DomainError(f'Digit {x!r} of particle {p + 1} is out of range [0, {d})')
        index = index * d + int(x)
    return index


def digits_from_index(index: int, n: int, d: int) -> Tuple[int, ...]:
    check_register(n, d)
    if isinstance(index, bool) or int(index) != index or not 0 <= index < d ** n:
        raise DomainError(f'Index {index!r} is out of range [0, {d ** n}) for n={n}, d={d}')
    index = int(index)
    digits = [0] * n
    for p in range(n - 1, -1, -1):
        index, digits[p] = divmod(index, d)
    return tuple(digits)


def check_positions(positions: Iterable[int], n: int, what: str = 'positions') -> Tuple[int, ...]:
    """Validates 1-based particle positions. Order is preserved."""
    positions = tuple(positions)
    if len(positions) == 0:
        raise DomainError(f'{what} must not be empty')
    for p in positions:
        if isinstance(p, bool) or int(p) != p:
            raise DomainError(f'{what} must be integers, got {p!r}')
        if not 1 <= p <= n:
            raise DomainError(f'Position {p} in {what} is outside 1..{n}')
    if len(set(positions)) != len(positions):
        raise DomainError(f'{what} contains duplicate positions: {positions}')
    return tuple(int(p) for p in positions)
