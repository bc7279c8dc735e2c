"""
Linear orders on a window, their interval bornologies, and chain bases.
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from coarse.bornologies import BornologyPresentation, covered_family
from coarse.exceptions import StructuralError
from coarse.windows import Window, bits, subset_key


@dataclass(frozen=True)
class LinearOrder:
    """
    ``sequence`` lists point indices from least to greatest. The optional
    ``split`` (l, r) marks adjacent points; X_l = {x ≤ l}, X_r = {x ≥ r}.
    """
    window: Window
    sequence: Tuple[int, ...]
    split: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if sorted(self.sequence) != list(range(self.window.size)):
            raise StructuralError('Order must list every window point exactly once', field='sequence')
        rank = [0] * self.window.size
        for position, point in enumerate(self.sequence):
            rank[point] = position
        object.__setattr__(self, '_rank', tuple(rank))
        if self.split is not None:
            left, right = self.split
            if rank[left] + 1 != rank[right]:
                raise StructuralError('Split markers must be adjacent with l < r', field='split')

    @classmethod
    def natural(cls, window: Window, split: Optional[Tuple] = None) -> 'LinearOrder':
        return cls.from_sequence(window, window.points, split=split)

    @classmethod
    def from_sequence(cls, window: Window, points: Iterable, split: Optional[Tuple] = None) -> 'LinearOrder':
        sequence = tuple(window.index_of(p, field='sequence') for p in points)
        if split is not None:
            split = tuple(window.index_of(p, field='split') for p in split)
        return cls(window, sequence, split)

    def rank(self, point: int) -> int:
        return self._rank[point]

    def less(self, first: int, second: int) -> bool:
        return self._rank[first] < self._rank[second]

    def minimum(self, mask: int) -> int:
        return min(bits(mask), key=self._rank.__getitem__)

    def maximum(self, mask: int) -> int:
        return max(bits(mask), key=self._rank.__getitem__)

    def interval_mask(self, low: int, high: int) -> int:
        """[a, b] = {x : a ≤ x ≤ b}; empty when b < a."""
        start, stop = self._rank[low], self._rank[high]
        return sum(1 << x for x in self.sequence[start:stop + 1])

    def interval(self, low, high) -> frozenset:
        window = self.window
        return window.subset(self.interval_mask(window.index_of(low), window.index_of(high)))

    def x_l(self) -> int:
        if self.split is None:
            return 0
        return self.interval_mask(self.sequence[0], self.split[0])

    def x_r(self) -> int:
        if self.split is None:
            return 0
        return self.interval_mask(self.split[1], self.sequence[-1])

    def with_split(self, left: int, right: int) -> 'LinearOrder':
        return LinearOrder(self.window, self.sequence, (left, right))

    def reversed(self) -> 'LinearOrder':
        split = None if self.split is None else (self.split[1], self.split[0])
        return LinearOrder(self.window, tuple(reversed(self.sequence)), split)

    def as_dict(self) -> dict:
        window = self.window
        return {
            'sequence': [window.label(x) for x in self.sequence],
            'split': None if self.split is None else [window.label(x) for x in self.split],
        }


def interval_bornology(order: LinearOrder) -> BornologyPresentation:
    """All intervals [a, b], a ≤ b, listed by (rank a, rank b)."""
    sequence = order.sequence
    base = []
    for start in range(len(sequence)):
        mask = 0
        for point in sequence[start:]:
            mask |= 1 << point
            base.append(mask)
    return BornologyPresentation(order.window, tuple(base))


def ordinal_sum_shape(order: LinearOrder) -> bool:
    """
    Split structure behind the antiordinal ⊕ ordinal shape. On a finite
    window every subset of X_l has a maximum and every subset of X_r a
    minimum, so only the split itself is checked.
    """
    if order.split is None:
        return False
    left, right = order.x_l(), order.x_r()
    return left & right == 0 and left | right == order.window.full_mask


@dataclass(frozen=True)
class ChainBase:
    """
    B_0 ⊂ B_1 ⊂ … with an enumeration of B_0 and of every difference
    D_i = B_{i+1} \\ B_i.
    """
    window: Window
    chain: Tuple[int, ...]
    enumerations: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.chain:
            raise StructuralError('A chain base needs at least one set', field='chain')
        for lower, upper in zip(self.chain, self.chain[1:]):
            if lower & ~upper or lower == upper:
                raise StructuralError('Chain must be strictly increasing by inclusion', field='chain')
        if len(self.enumerations) != len(self.chain):
            raise StructuralError('One enumeration for B_0 and one per difference', field='enumerations')
        for part, enumeration in zip(self.differences(), self.enumerations):
            if sorted(enumeration) != list(bits(part)):
                raise StructuralError('Enumeration does not list its difference exactly', field='enumerations')

    @classmethod
    def from_sets(cls, window: Window, sets: Iterable[Iterable],
                  enumerations: Optional[Iterable[Iterable]] = None) -> 'ChainBase':
        chain = tuple(window.mask(points, field='chain') for points in sets)
        if enumerations is None:
            previous = 0
            listed = []
            for mask in chain:
                listed.append(tuple(bits(mask & ~previous)))
                previous = mask
            return cls(window, chain, tuple(listed))
        listed = tuple(
            tuple(window.index_of(p, field='enumerations') for p in enumeration)
            for enumeration in enumerations
        )
        return cls(window, chain, listed)

    def differences(self) -> Tuple[int, ...]:
        """B_0 followed by D_0, D_1, …"""
        parts = [self.chain[0]]
        parts.extend(upper & ~lower for lower, upper in zip(self.chain, self.chain[1:]))
        return tuple(parts)

    def bornology(self) -> BornologyPresentation:
        return BornologyPresentation(self.window, self.chain)


def interval_base_from_chain(chain_base: ChainBase) -> LinearOrder:
    """
    B_0 first in its enumeration, then each difference in its enumeration,
    earlier differences below later ones. Points outside the last chain set
    are not covered by the chain; they follow in canonical order.
    """
    sequence = [point for enumeration in chain_base.enumerations for point in enumeration]
    outside = chain_base.window.full_mask & ~chain_base.chain[-1]
    sequence.extend(bits(outside))
    return LinearOrder(chain_base.window, tuple(sequence))


def compare_coverage(first: BornologyPresentation, second: BornologyPresentation) -> dict:
    """Exact comparison of covered families on interior subsets."""
    window = first.window
    if second.window != window:
        raise StructuralError('Bornologies live on different windows', field='window')
    mine = covered_family(first)
    theirs = covered_family(second)
    only_first = sorted(mine - theirs, key=subset_key)
    only_second = sorted(theirs - mine, key=subset_key)
    return {
        'equal': not only_first and not only_second,
        'only_first': window.labels(only_first[0]) if only_first else None,
        'only_second': window.labels(only_second[0]) if only_second else None,
    }
