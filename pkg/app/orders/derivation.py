"""
Orders from 2-selectors.

Greedy extension over the canonical enumeration stands in for a maximal
chain: L grows downwards from l, R upwards from r, and every point outside
A = L ∪ R is attached to a point of A by the map h. The derived order lists
the fibers of h in the order of A.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from django.conf import settings

from coarse.bornologies import (
    BornologyPresentation, discrete_entourage, discrete_from_bornology, union_closure_chain,
)
from coarse.exceptions import InconclusiveError, PreconditionError, StructuralError
from coarse.hyper import KIND_PAIRS, HyperEntourage, SelectorMap, check_selector
from coarse.presentations import CoarsePresentation
from coarse.windows import bits

from .linear import LinearOrder, compare_coverage, interval_bornology
from .selectors import ChoiceRelation

logger = logging.getLogger(__name__)

CASE_BOUNDED = 'bounded'
CASE_UNBOUNDED_SIDES = 'case 1'
CASE_BOUNDED_LEFT = 'case 2'
CASE_BOUNDED_RIGHT = 'case 3'


def _require_two_selector(selector: SelectorMap, space: CoarsePresentation):
    report = check_selector(selector, space)
    if not report['passed']:
        raise PreconditionError('Map is not a 2-selector of the discrete space', report=report)
    return report


def _covering(chain: Tuple[int, ...], mask: int) -> Optional[int]:
    for element in chain:
        if mask & ~element == 0:
            return element
    return None


def star_constant(selector: SelectorMap, bounded: int, born: BornologyPresentation,
                  space: Optional[CoarsePresentation] = None, verify: bool = True) -> int:
    """
    Least chain element C ⊇ B such that values of E_B♭-close pairs are
    E_C-close. Every z outside such a C lies on one side of B under ≺_f.

    Args:
        selector: 2-selector of the discrete space of ``born``.
        bounded: mask of B.
        born: the bornology presentation.
        space: its discrete space, when already built.
        verify: run check_selector first.

    Returns:
        The mask of C.
    """
    window = born.window
    if space is None:
        space = discrete_from_bornology(born)
    if verify:
        _require_two_selector(selector, space)

    chain, _ = union_closure_chain(born)
    relation = ChoiceRelation(selector)
    if _covering(chain, bounded) is None:
        raise InconclusiveError(
            'Set is not covered by the bornology within the window',
            witness={'set': window.labels(bounded)},
        )

    interior = window.interior_mask
    lifted = HyperEntourage(discrete_entourage(window, bounded), KIND_PAIRS, tuple(window.pairs()))
    close = [
        (pair, neighbour)
        for pair in window.pairs(interior)
        for neighbour in lifted.ball_of(pair)
        if neighbour != pair
    ]
    choices = selector.choices

    for candidate in chain:
        if bounded & ~candidate:
            continue
        if all(
            choices[pair] == choices[neighbour]
            or (candidate >> choices[pair] & 1 and candidate >> choices[neighbour] & 1)
            for pair, neighbour in close
        ):
            return candidate

    members = list(bits(bounded))
    for z in bits(interior & ~bounded):
        above = all(relation(b, z) for b in members)
        below = all(relation(z, b) for b in members)
        if not above and not below:
            raise InconclusiveError(
                'No base element certifies the choice dichotomy',
                witness={'set': window.labels(bounded), 'z': window.label(z)},
            )
    raise InconclusiveError(
        'No base element certifies the choice dichotomy',
        witness={'set': window.labels(bounded), 'z': None},
    )


@dataclass
class OrderDerivation:
    """Everything the construction decided, for reports and tests."""
    order: LinearOrder
    case: str
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    anchors: Dict[int, int] = field(default_factory=dict)
    witnesses: Dict[int, int] = field(default_factory=dict)
    notes: List[dict] = field(default_factory=list)
    coverage: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        window = self.order.window
        return {
            'order': self.order.as_dict(),
            'case': self.case,
            'left': [window.label(x) for x in self.left],
            'right': [window.label(x) for x in self.right],
            'anchors': [
                {'point': window.label(x), 'anchor': window.label(a)}
                for x, a in sorted(self.anchors.items())
            ],
            'star_witnesses': [
                {'point': window.label(x), 'set': window.labels(c)}
                for x, c in sorted(self.witnesses.items())
            ],
            'notes': self.notes,
            'coverage': self.coverage,
        }


def _split_points(window, split) -> Optional[Tuple[int, int]]:
    if split is None:
        split = settings.BALLEAN_SPLIT_POINTS
    if split is None:
        return None
    indices = []
    for raw in split:
        try:
            indices.append(window.index_of(raw, field='split'))
        except StructuralError:
            if not isinstance(raw, str) or not raw.lstrip('-').isdigit():
                raise
            indices.append(window.index_of(int(raw), field='split'))
    if len(indices) != 2 or indices[0] == indices[1]:
        raise StructuralError('Split needs two distinct points', field='split')
    return indices[0], indices[1]


def _grow(relation: ChoiceRelation, size: int, left: int, right: int):
    """Greedy maximal A = L ∪ R, both kept ascending under ≺_f."""
    lower = [left]
    upper = [right]

    def slot(chain, x):
        position = sum(1 for y in chain if relation(y, x))
        if all(relation(y, x) for y in chain[:position]) and all(relation(x, y) for y in chain[position:]):
            return position
        return None

    changed = True
    while changed:
        changed = False
        for x in range(size):
            if x in lower or x in upper:
                continue
            if relation(right, x) and all(relation(y, x) for y in lower):
                position = slot(upper, x)
                if position is not None:
                    upper.insert(position, x)
                    changed = True
                    continue
            if relation(x, left) and all(relation(x, y) for y in upper):
                position = slot(lower, x)
                if position is not None:
                    lower.insert(position, x)
                    changed = True
    return tuple(lower), tuple(upper)


def _anchor(relation: ChoiceRelation, x: int, lower, upper, notes, window) -> int:
    """h(x): the least c ∈ R with x below R from c on, else the greatest d ∈ L with L below x up to d."""
    least = None
    for position in range(len(upper) - 1, -1, -1):
        if relation(x, upper[position]):
            least = upper[position]
        else:
            break
    if least is None:
        notes.append({'kind': 'right truncation', 'point': window.label(x)})
        return upper[-1]
    if least != upper[0]:
        return least

    greatest = None
    for d in lower:
        if relation(d, x):
            greatest = d
        else:
            break
    if greatest is None:
        notes.append({'kind': 'left truncation', 'point': window.label(x)})
        return lower[0]
    return greatest


def derive_order(selector: SelectorMap, born: BornologyPresentation,
                 split=None, verify: bool = True) -> OrderDerivation:
    """
    Build a linear order with split (l, r) whose interval bornology matches
    ``born``. Postcondition mismatches land in ``coverage``; they are not
    raised.
    """
    window = born.window
    if window.size < 2:
        raise StructuralError('Deriving an order needs at least two points', field='points')
    space = discrete_from_bornology(born)
    if verify:
        _require_two_selector(selector, space)
    relation = ChoiceRelation(selector)
    chain, _ = union_closure_chain(born)

    def is_bounded(points) -> bool:
        return _covering(chain, sum(1 << x for x in points)) is not None

    fixed = _split_points(window, split)
    if fixed is None:
        first, second = 0, 1
        left = selector.choices[0b11]
        right = second if left == first else first
    else:
        left, right = fixed
        if not relation(left, right):
            raise StructuralError('Split points must satisfy l ≺ r', field='split')

    lower, upper = _grow(relation, window.size, left, right)
    members = set(lower) | set(upper)

    if is_bounded(range(window.size)):
        case = CASE_BOUNDED
    elif is_bounded(members):
        raise InconclusiveError(
            'Greedy extension stalled inside one base element',
            witness={'left': [window.label(x) for x in lower], 'right': [window.label(x) for x in upper]},
        )
    elif is_bounded(lower):
        case = CASE_BOUNDED_LEFT
    elif is_bounded(upper):
        case = CASE_BOUNDED_RIGHT
    else:
        case = CASE_UNBOUNDED_SIDES
    logger.info('Deriving order with l=%r r=%r: %s', window.label(left), window.label(right), case)

    notes = []
    anchors = {}
    witnesses = {}
    for x in range(window.size):
        if x in members:
            continue
        if case != CASE_BOUNDED:
            witnesses[x] = star_constant(selector, (1 << right) | (1 << x), born, space, verify=False)
        anchors[x] = _anchor(relation, x, lower, upper, notes, window)
    if notes:
        logger.info('%d points anchored past the window edge', len(notes))

    sequence = []
    for a in lower:
        fiber = [x for x in sorted(anchors) if anchors[x] == a]
        sequence.extend(fiber + [a])
    for a in upper:
        fiber = [x for x in sorted(anchors) if anchors[x] == a]
        sequence.extend([a] + fiber)

    if case == CASE_BOUNDED_LEFT:
        block = {x for x in range(window.size) if x not in upper and all(relation.strictly(x, y) for y in upper)}
        sequence = [x for x in sequence if x in block] + [x for x in sequence if x not in block]
        if not is_bounded(block):
            notes.append({'kind': 'lower block not covered', 'points': [window.label(x) for x in sorted(block)]})
    elif case == CASE_BOUNDED_RIGHT:
        block = {x for x in range(window.size) if x not in lower and all(relation.strictly(y, x) for y in lower)}
        sequence = [x for x in sequence if x not in block] + [x for x in sequence if x in block]
        if not is_bounded(block):
            notes.append({'kind': 'upper block not covered', 'points': [window.label(x) for x in sorted(block)]})

    position = sequence.index(right)
    order = LinearOrder(window, tuple(sequence), (sequence[position - 1], right))
    coverage = compare_coverage(interval_bornology(order), born)
    if not coverage['equal']:
        logger.info('Derived interval bornology differs from the input on %r', coverage)
    return OrderDerivation(order, case, lower, upper, anchors, witnesses, notes, coverage)


def order_from_two_selector(selector: SelectorMap, born: BornologyPresentation,
                            split=None) -> LinearOrder:
    return derive_order(selector, born, split=split).order
