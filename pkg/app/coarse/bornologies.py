"""
Bornology presentations and the discrete coarse spaces they define.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

from .entourages import Entourage
from .exceptions import StructuralError
from .presentations import CoarsePresentation
from .windows import Window, submasks, subset_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BornologyPresentation:
    """
    A finite base of nonempty subsets. A set is covered when some base
    element contains it; the presentation need not be union-closed.
    """
    window: Window
    base: Tuple[int, ...]

    def __post_init__(self):
        for mask in self.base:
            if not mask:
                raise StructuralError('Bornology base elements must be nonempty', field='base')
            if mask & ~self.window.full_mask:
                raise StructuralError('Bornology base element outside the window', field='base')

    @classmethod
    def from_sets(cls, window: Window, sets: Iterable[Iterable]) -> 'BornologyPresentation':
        masks = []
        for points in sets:
            mask = window.mask(points, field='base')
            if mask not in masks:
                masks.append(mask)
        return cls(window, tuple(masks))

    def covers(self, mask: int) -> bool:
        return any(mask & ~element == 0 for element in self.base)

    def sets(self) -> Tuple[frozenset, ...]:
        return tuple(self.window.subset(mask) for mask in self.base)


def covered(bornology: BornologyPresentation, points: Iterable) -> bool:
    return bornology.covers(bornology.window.mask(points))


def covered_family(bornology: BornologyPresentation, interior_only: bool = True) -> frozenset:
    """All nonempty covered subsets (of interior points, by default), as masks."""
    limit = bornology.window.interior_mask if interior_only else bornology.window.full_mask
    family = set()
    for element in bornology.base:
        family.update(submasks(element & limit))
    return frozenset(family)


def is_chain(masks: Iterable[int]) -> bool:
    ordered = sorted(set(masks), key=subset_key)
    return all(lower & ~upper == 0 for lower, upper in zip(ordered, ordered[1:]))


def union_closure_chain(bornology: BornologyPresentation) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Ascending chain generating the same ideal as the base.

    A base that is already a chain is only sorted. Otherwise the generating
    sets are sorted by size (ties canonical) and replaced by their running
    unions. Returns the chain and the sets it adds to the base.
    """
    ordered = sorted(set(bornology.base), key=subset_key)
    if is_chain(ordered):
        return tuple(ordered), ()
    chain = []
    running = 0
    for mask in ordered:
        running |= mask
        if not chain or chain[-1] != running:
            chain.append(running)
    added = tuple(mask for mask in chain if mask not in bornology.base)
    return tuple(chain), added


def validate_bornology(bornology: BornologyPresentation) -> dict:
    window = bornology.window
    truncated = [i for i in range(window.size) if not bornology.covers(1 << i)]
    chain, added = union_closure_chain(bornology)
    return {
        'passed': True,
        'chain': not added,
        'closure_added': [window.labels(mask) for mask in added],
        'window_truncated_points': [window.label(i) for i in truncated],
    }


def discrete_entourage(window: Window, generator: int) -> Entourage:
    """E_B: the ball of x is B when x ∈ B, and {x} otherwise."""
    return Entourage(window, tuple(
        generator if generator >> i & 1 else 1 << i for i in range(window.size)
    ))


def discrete_from_bornology(bornology: BornologyPresentation) -> CoarsePresentation:
    """
    The discrete coarse space X_B, one entourage E_B per chain element. The
    scale label of E_B is the list of points of B.
    """
    window = bornology.window
    chain, added = union_closure_chain(bornology)
    notes = []
    if added:
        logger.info('Union closure added %d generating sets', len(added))
        notes.append({
            'kind': 'union closure',
            'added': [window.labels(mask) for mask in added],
        })
    if not chain:
        return CoarsePresentation(window, (Entourage.diagonal(window),), scales=([],),
                                  notes=tuple(notes))
    base = tuple(discrete_entourage(window, mask) for mask in chain)
    scales = tuple(window.labels(mask) for mask in chain)
    return CoarsePresentation(window, base, scales=scales, notes=tuple(notes))


def bounded_sets_bornology(presentation: CoarsePresentation) -> BornologyPresentation:
    """
    Base {E[x] : E in the base, x interior}, deduplicated in (scale, point)
    order, followed by the running unions union_closure_chain adds when the
    balls do not form a chain.
    """
    masks = []
    for entourage in presentation.base:
        for x in presentation.window.interior_indices():
            mask = entourage.balls[x]
            if mask not in masks:
                masks.append(mask)
    balls = BornologyPresentation(presentation.window, tuple(masks))
    _, added = union_closure_chain(balls)
    return BornologyPresentation(presentation.window, balls.base + added)