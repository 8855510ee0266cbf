from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from pkmekit.structures.structure_spec import StructureSpec
from pkmekit.utilities.exceptions import DomainError


def _step(p: int, shift: int, n: int) -> int:
    return (p - 1 + shift) % n + 1


def cyclic_runs(positions: Iterable[int], n: int) -> List[Tuple[int, ...]]:
    """Maximal runs of cyclically consecutive positions, each run in circle order, runs sorted by smallest element."""
    members = set(positions)
    if len(members) == 0:
        return []
    if len(members) == n:
        return [tuple(range(1, n + 1))]
    runs = []
    for p in sorted(members):
        if _step(p, -1, n) in members:
            continue
        run = [p]
        while _step(run[-1], 1, n) in members:
            run.append(_step(run[-1], 1, n))
        runs.append(tuple(run))
    return sorted(runs, key=min)


class PlanarStructure(object):
    """
    Two-region partition of the circle 1..n into alternating arcs A_1, B_1, ..., A_m, B_m. Two structures are the
    same iff their region A position sets are equal.
    """
    def __init__(self, n: int, a_parts: Sequence[Sequence[int]], b_parts: Sequence[Sequence[int]]):
        self.n = n
        self.a_parts: Tuple[Tuple[int, ...], ...] = tuple(tuple(p) for p in a_parts)
        self.b_parts: Tuple[Tuple[int, ...], ...] = tuple(tuple(p) for p in b_parts)

    @classmethod
    def from_region_a(cls, n: int, region_a: Iterable[int]) -> PlanarStructure:
        region_a = set(region_a)
        if len(region_a) == 0 or not region_a.issubset(range(1, n + 1)):
            raise DomainError(f'Region A {sorted(region_a)} must be a nonempty subset of 1..{n}')
        region_b = set(range(1, n + 1)) - region_a
        return cls(n, cyclic_runs(region_a, n), cyclic_runs(region_b, n))

    @property
    def m(self) -> int:
        return len(self.a_parts)

    @property
    def region_a(self) -> Tuple[int, ...]:
        return tuple(sorted(p for part in self.a_parts for p in part))

    @property
    def region_b(self) -> Tuple[int, ...]:
        return tuple(sorted(p for part in self.b_parts for p in part))

    def is_valid(self) -> bool:
        parts = self.a_parts + self.b_parts
        if len(self.a_parts) == 0 or len(self.a_parts) != len(self.b_parts):
            return False
        if any(len(p) == 0 for p in parts):
            return False
        flat = [p for part in parts for p in part]
        if len(flat) != len(set(flat)) or set(flat) != set(range(1, self.n + 1)):
            return False
        # every part a single arc
        if any(len(cyclic_runs(part, self.n)) != 1 for part in parts):
            return False
        # alternation: the parts of a region are exactly its maximal runs, so no two A (or B) parts touch
        return len(cyclic_runs(self.region_a, self.n)) == len(self.a_parts) and \
            len(cyclic_runs(self.region_b, self.n)) == len(self.b_parts)

    def rotated(self, shift: int) -> PlanarStructure:
        return PlanarStructure.from_region_a(self.n, [_step(p, shift, self.n) for p in self.region_a])

    def __eq__(self, other):
        if not isinstance(other, PlanarStructure):
            return NotImplemented
        return self.n == other.n and self.region_a == other.region_a

    def __hash__(self):
        return hash((self.n, self.region_a))

    def __str__(self):
        def fmt(parts):
            return ','.join('{' + ','.join(str(p) for p in sorted(part)) + '}' for part in sorted(parts, key=min))
        return f'A: {fmt(self.a_parts)} B: {fmt(self.b_parts)}'

    def __repr__(self):
        return f'PlanarStructure(n={self.n}, a_parts={self.a_parts}, b_parts={self.b_parts})'


@dataclass
class _SizeNode:
    value: int
    nxt: Optional['_SizeNode']


def _to_tuple(head: _SizeNode) -> Tuple[int, ...]:
    out = []
    while head is not None:
        out.append(head.value)
        head = head.nxt
    return tuple(out)


def _distinct_orders(sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Every distinct ordering of a multiset of part sizes, each visited exactly once (loopless multiset permutations by
    prefix shifts), so repeated sizes never produce duplicates to filter out.
    """
    values = sorted(sizes)
    if len(values) < 2:
        return [tuple(values)]
    head = None
    for v in values:
        head = _SizeNode(v, head)
    i = head
    for _ in range(len(values) - 2):
        i = i.nxt
    j = i.nxt
    orders = [_to_tuple(head)]
    while j.nxt is not None or j.value < head.value:
        s = j if j.nxt is not None and i.value >= j.nxt.value else i
        t = s.nxt
        s.nxt = t.nxt
        t.nxt = head
        if t.value < head.value:
            i = t
        j = i.nxt
        head = t
        orders.append(_to_tuple(head))
    return sorted(orders)


def enumerate_structures(spec: StructureSpec) -> List[PlanarStructure]:
    """
    Places the 2m arcs A, B, A, B, ... at every rotation for every ordering of a_sizes and b_sizes, then keeps one
    structure per region A position set. Output is sorted by the sorted region A tuple.
    """
    spec._sanity_check()
    n = spec.n
    found = {}
    for a_order in _distinct_orders(spec.a_sizes):
        for b_order in _distinct_orders(spec.b_sizes):
            arc_sizes = [s for pair in zip(a_order, b_order) for s in pair]
            for start in range(1, n + 1):
                region_a = []
                p = start
                for j, size in enumerate(arc_sizes):
                    if j % 2 == 0:
                        region_a.extend(_step(p, i, n) for i in range(size))
                    p = _step(p, size, n)
                key = tuple(sorted(region_a))
                if key not in found:
                    found[key] = PlanarStructure.from_region_a(n, key)
    return [found[key] for key in sorted(found)]


def structure_count(spec: StructureSpec) -> int:
    return len(enumerate_structures(spec))
