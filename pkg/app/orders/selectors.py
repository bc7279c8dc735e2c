"""
Selectors read off a linear order, and the relation a 2-selector induces.
"""
from coarse.exceptions import StructuralError
from coarse.hyper import KIND_COVERED, KIND_PAIRS, SelectorMap, domain_for

from .linear import LinearOrder, interval_bornology


def two_selector_from_order(order: LinearOrder) -> SelectorMap:
    """f({a, b}) = min(a, b)."""
    window = order.window
    return SelectorMap.from_function(
        window, KIND_PAIRS, window.pairs(), order.minimum,
    )


def selector_from_split_order(order: LinearOrder) -> SelectorMap:
    """
    On every covered subset Y: max(Y ∩ X_l) when that is nonempty, otherwise
    min(Y ∩ X_r).
    """
    if order.split is None:
        raise StructuralError('A split order needs split markers (l, r)', field='split')
    left = order.x_l()
    right = order.x_r()

    def choose(mask: int) -> int:
        if mask & left:
            return order.maximum(mask & left)
        return order.minimum(mask & right)

    domain = domain_for(KIND_COVERED, order.window, interval_bornology(order))
    return SelectorMap.from_function(order.window, KIND_COVERED, domain, choose)


class ChoiceRelation:
    """
    a ≺ b iff a = b or f({a, b}) = a. Total and antisymmetric for any
    2-selector; transitive only when f comes from a linear order.
    """

    def __init__(self, selector: SelectorMap):
        if selector.kind != KIND_PAIRS:
            raise StructuralError('The induced relation needs a 2-selector', field='kind')
        window = selector.window
        missing = next((mask for mask in window.pairs() if mask not in selector.choices), None)
        if missing is not None:
            raise StructuralError(f'Selector undefined on {window.labels(missing)!r}', field='choices')
        self.selector = selector

    def __call__(self, first: int, second: int) -> bool:
        if first == second:
            return True
        return self.selector.choices[(1 << first) | (1 << second)] == first

    def strictly(self, first: int, second: int) -> bool:
        return first != second and self(first, second)

    def is_transitive_on(self, points) -> bool:
        points = list(points)
        return all(
            self(a, c)
            for a in points for b in points for c in points
            if self(a, b) and self(b, c)
        )


def precedes(selector: SelectorMap) -> ChoiceRelation:
    return ChoiceRelation(selector)
