"""
Backtracking search for 2-selectors with replayable refutations.

Domains are lists of candidate values per pair. Propagation runs from pairs
whose domain is a singleton and removes values of close pairs the
requirement forbids. The certificate records every assumption, prune and
conflict; a conflict closes the innermost open assumption and refutes its
value, and a conflict with no open assumption ends the proof.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional

from django.conf import settings

from coarse.exceptions import SearchBudgetExceeded
from coarse.hyper import SelectorMap

from .constraints import ConstraintScenario

logger = logging.getLogger(__name__)

FOUND = 'found'
UNSAT = 'unsat'
INCONCLUSIVE = 'inconclusive'

STEP_ASSUME = 'assume'
STEP_PRUNE = 'prune'
STEP_CONFLICT = 'conflict'


@dataclass
class SearchOutcome:
    kind: str
    witness: Optional[SelectorMap] = None
    certificate: Optional[List[dict]] = None
    reason: Optional[str] = None
    assumptions: int = 0

    def as_dict(self) -> dict:
        return {
            'kind': self.kind,
            'witness': None if self.witness is None else self.witness.as_list(),
            'certificate': self.certificate,
            'reason': self.reason,
            'assumptions': self.assumptions,
        }


@dataclass
class _Solver:
    scenario: ConstraintScenario
    max_steps: Optional[int] = None
    assumptions: int = 0
    steps: List[tuple] = field(default_factory=list)

    def __post_init__(self):
        self.neighbours = [
            sorted(j for j in row if j != i) for i, row in enumerate(self.scenario.closeness)
        ]

    def propagate(self, domains, sources) -> bool:
        queue = deque(sources)
        while queue:
            i = queue.popleft()
            (value,) = domains[i]
            for j in self.neighbours[i]:
                before = len(domains[j])
                for other in list(domains[j]):
                    if not self.scenario.allowed(value, other):
                        domains[j].remove(other)
                        self.steps.append((STEP_PRUNE, j, other, i, value))
                if not domains[j]:
                    self.steps.append((STEP_CONFLICT, j))
                    return False
                if before > 1 and len(domains[j]) == 1:
                    queue.append(j)
        return True

    def pick(self, domains) -> Optional[int]:
        """Open pair with the most open close pairs; ties to the canonically first."""
        best = None
        best_degree = -1
        for i, domain in enumerate(domains):
            if len(domain) < 2:
                continue
            degree = sum(1 for j in self.neighbours[i] if len(domains[j]) > 1)
            if degree > best_degree:
                best, best_degree = i, degree
        return best

    def solve(self, domains) -> Optional[list]:
        while True:
            i = self.pick(domains)
            if i is None:
                return [domain[0] for domain in domains]
            value = domains[i][0]
            self.assumptions += 1
            if self.max_steps is not None and self.assumptions > self.max_steps:
                raise SearchBudgetExceeded(
                    'Search step budget exhausted',
                    witness={'max_steps': self.max_steps},
                )
            self.steps.append((STEP_ASSUME, i, value))
            logger.debug('Assume pair %d -> %d', i, value)
            branch = [list(domain) for domain in domains]
            branch[i] = [value]
            if self.propagate(branch, [i]):
                solution = self.solve(branch)
                if solution is not None:
                    return solution
            domains[i].remove(value)
            if not self.propagate(domains, [i]):
                return None

    def run(self, domains) -> Optional[list]:
        sources = [i for i, domain in enumerate(domains) if len(domain) == 1]
        if any(not domain for domain in domains):
            return None
        if not self.propagate(domains, sources):
            return None
        return self.solve(domains)


def _fresh_domains(scenario: ConstraintScenario):
    return [list(scenario.values(i)) for i in range(len(scenario.pairs))]


def _least_witness(solver: _Solver, scenario: ConstraintScenario, solution: list) -> list:
    """Fix pairs in canonical order to their smallest feasible value."""
    fixed = _fresh_domains(scenario)
    for i in range(len(scenario.pairs)):
        smallest = scenario.values(i)[0]
        if solution[i] != smallest and smallest in fixed[i]:
            trial = [list(domain) for domain in fixed]
            trial[i] = [smallest]
            candidate = solver.run(trial)
            if candidate is not None:
                solution = candidate
        fixed[i] = [solution[i]]
        solver.propagate(fixed, [i])
    return solution


def _render(scenario: ConstraintScenario, steps) -> List[dict]:
    window = scenario.window
    pair = lambda i: window.labels(scenario.pairs[i])  # noqa: E731
    rendered = []
    for step in steps:
        if step[0] == STEP_ASSUME:
            rendered.append({'step': STEP_ASSUME, 'pair': pair(step[1]), 'value': window.label(step[2])})
        elif step[0] == STEP_PRUNE:
            rendered.append({
                'step': STEP_PRUNE,
                'pair': pair(step[1]),
                'value': window.label(step[2]),
                'by_pair': pair(step[3]),
                'by_value': window.label(step[4]),
            })
        else:
            rendered.append({'step': STEP_CONFLICT, 'pair': pair(step[1])})
    return rendered


def search_two_selector(scenario: ConstraintScenario, max_steps: Optional[int] = None) -> SearchOutcome:
    """
    Complete search. Found carries the canonically least witness, Unsat the
    certificate of the first (canonical) run.

    Raises:
        SearchBudgetExceeded: more than ``max_steps`` assumptions (default
            settings.BALLEAN_SEARCH_MAX_STEPS; None means unlimited).
    """
    if max_steps is None:
        max_steps = settings.BALLEAN_SEARCH_MAX_STEPS
    solver = _Solver(scenario, max_steps=max_steps)
    solution = solver.run(_fresh_domains(scenario))
    if solution is None:
        logger.info('Unsat after %d assumptions', solver.assumptions)
        return SearchOutcome(
            UNSAT,
            certificate=_render(scenario, solver.steps),
            assumptions=solver.assumptions,
        )
    solution = _least_witness(solver, scenario, solution)
    logger.info('Found a 2-selector after %d assumptions', solver.assumptions)
    return SearchOutcome(FOUND, witness=scenario.selector(solution), assumptions=solver.assumptions)


def replay_certificate(scenario: ConstraintScenario, certificate: List[dict]) -> bool:
    """
    True iff every step is justified in turn and the last step is a conflict
    with no open assumption.
    """
    window = scenario.window
    lookup = {mask: i for i, mask in enumerate(scenario.pairs)}

    def pair_index(labels):
        return lookup.get(window.mask(labels, field='certificate'))

    def point(label):
        return window.index_of(label, field='certificate')

    domains = [set(scenario.values(i)) for i in range(len(scenario.pairs))]
    stack = []
    for position, step in enumerate(certificate):
        kind = step.get('step')
        i = pair_index(step['pair'])
        if i is None:
            return False
        if kind == STEP_ASSUME:
            value = point(step['value'])
            if value not in domains[i]:
                return False
            stack.append(([set(domain) for domain in domains], i, value))
            domains[i] = {value}
        elif kind == STEP_PRUNE:
            value = point(step['value'])
            source = pair_index(step['by_pair'])
            by_value = point(step['by_value'])
            if (
                source is None
                or source not in scenario.closeness[i]
                or domains[source] != {by_value}
                or value not in domains[i]
                or scenario.allowed(by_value, value)
            ):
                return False
            domains[i].discard(value)
        elif kind == STEP_CONFLICT:
            if domains[i]:
                return False
            if not stack:
                return position == len(certificate) - 1
            domains, assumed, value = stack.pop()
            domains[assumed].discard(value)
        else:
            return False
    return False
