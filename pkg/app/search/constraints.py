"""
Finite constraint scenarios for 2-selector existence.

A scenario asks for a choice f(P) ∈ P on every listed pair such that close
pairs receive values allowed by the requirement relation.
"""
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

from coarse.entourages import Entourage
from coarse.exceptions import StructuralError
from coarse.hyper import KIND_PAIRS, SelectorMap
from coarse.windows import Window, bits, subset_key


@dataclass(frozen=True)
class ConstraintScenario:
    """
    ``pairs`` are 2-subset masks in canonical order. ``closeness[i]`` holds
    the indices of the pairs close to pair ``i`` (itself included).
    ``requirement`` is a reflexive, symmetric relation on points.
    """
    window: Window
    pairs: Tuple[int, ...]
    closeness: Tuple[frozenset, ...]
    requirement: Entourage

    def __post_init__(self):
        if len(set(self.pairs)) != len(self.pairs):
            raise StructuralError('Scenario pairs must be distinct', field='pairs')
        for mask in self.pairs:
            if mask.bit_count() != 2 or mask & ~self.window.full_mask:
                raise StructuralError('Scenario pairs must be 2-subsets of the window', field='pairs')
        if len(self.closeness) != len(self.pairs):
            raise StructuralError('One closeness row per pair is required', field='closeness')
        for i, row in enumerate(self.closeness):
            if i not in row:
                raise StructuralError('Closeness must be reflexive', field='closeness')
            if any(j >= len(self.pairs) or i not in self.closeness[j] for j in row):
                raise StructuralError('Closeness must be symmetric', field='closeness')
        if self.requirement.window != self.window:
            raise StructuralError('Requirement lives on a different window', field='requirement')
        if not self.requirement.is_reflexive or not self.requirement.is_symmetric:
            raise StructuralError('Requirement must be reflexive and symmetric', field='requirement')

    @classmethod
    def build(cls, window: Window, pairs: Iterable[int], close: Callable[[int, int], bool],
              requirement: Entourage) -> 'ConstraintScenario':
        """Sort ``pairs`` canonically and tabulate ``close`` on pair masks."""
        pairs = tuple(sorted(set(pairs), key=subset_key))
        rows = []
        for first in pairs:
            rows.append(frozenset(
                j for j, second in enumerate(pairs) if first == second or close(first, second)
            ))
        return cls(window, pairs, tuple(rows), requirement)

    def values(self, i: int) -> Tuple[int, int]:
        return tuple(bits(self.pairs[i]))

    def allowed(self, value: int, other: int) -> bool:
        return bool(self.requirement.balls[value] >> other & 1)

    def selector(self, assignment: Iterable[int]) -> SelectorMap:
        return SelectorMap(self.window, KIND_PAIRS, dict(zip(self.pairs, assignment)))

    def describe(self) -> dict:
        return {
            'points': self.window.size,
            'pairs': len(self.pairs),
            'close_pairs': sum(len(row) - 1 for row in self.closeness) // 2,
        }


def check_two_selector_against_scenario(scenario: ConstraintScenario, selector: SelectorMap) -> dict:
    """Direct constraint check, independent of the search."""
    window = scenario.window
    violations = []
    for i, mask in enumerate(scenario.pairs):
        if mask not in selector.choices:
            violations.append({'kind': 'unassigned', 'pair': window.labels(mask)})
        elif not mask >> selector.choices[mask] & 1:
            violations.append({'kind': 'choice', 'pair': window.labels(mask)})
    if violations:
        return {'passed': False, 'violations': violations}

    for i, mask in enumerate(scenario.pairs):
        value = selector.choices[mask]
        for j in sorted(scenario.closeness[i]):
            if j <= i:
                continue
            other = selector.choices[scenario.pairs[j]]
            if not scenario.allowed(value, other):
                violations.append({
                    'kind': 'requirement',
                    'pairs': [window.labels(scenario.pairs[i]), window.labels(scenario.pairs[j])],
                    'values': [window.label(value), window.label(other)],
                })
    return {'passed': not violations, 'violations': violations}


def brute_force_two_selector(scenario: ConstraintScenario) -> Optional[SelectorMap]:
    """
    Lexicographically least satisfying assignment (pairs in canonical
    order, values in canonical order), or None.
    """
    choices = [scenario.values(i) for i in range(len(scenario.pairs))]
    for assignment in itertools.product(*choices):
        if all(
            scenario.allowed(assignment[i], assignment[j])
            for i, row in enumerate(scenario.closeness)
            for j in row
            if j > i
        ):
            return scenario.selector(assignment)
    return None
