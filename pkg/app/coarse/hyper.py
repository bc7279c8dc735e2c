"""
Hyperballean entourages, selector maps and macro-uniformity checks.

(A, B) ∈ E♭ iff A ⊆ E[B] and B ⊆ E[A]. Only the lifts of presented base
entourages are materialized. Each lift caches the balls of its domain
elements; related subsets are listed per subset on demand.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .bornologies import BornologyPresentation, covered_family
from .entourages import Entourage
from .exceptions import StructuralError
from .presentations import CoarsePresentation
from .windows import Window, submasks, subset_key

logger = logging.getLogger(__name__)

NO_MODULUS = 'no modulus within window'

KIND_COVERED = 'covered'
KIND_PAIRS = 'pairs'


def domain_for(kind: str, window: Window, bornology: Optional[BornologyPresentation] = None):
    """Canonically ordered domain masks of a selector of the given kind."""
    if kind == KIND_PAIRS:
        return tuple(window.pairs())
    if kind == KIND_COVERED:
        if bornology is None:
            raise StructuralError('A covered-subset domain needs a bornology', field='bornology')
        return tuple(sorted(covered_family(bornology, interior_only=False), key=subset_key))
    raise StructuralError(f'Unknown selector domain kind {kind!r}', field='kind')


@dataclass(frozen=True)
class HyperEntourage:
    source: Entourage
    kind: str
    domain: Tuple[int, ...]

    def __post_init__(self):
        ball = self.source.ball_mask
        object.__setattr__(self, '_position', {mask: i for i, mask in enumerate(self.domain)})
        object.__setattr__(self, '_balls', {mask: ball(mask) for mask in self.domain})

    def _ball(self, subset: int) -> int:
        found = self._balls.get(subset)
        return self.source.ball_mask(subset) if found is None else found

    def related(self, first: int, second: int) -> bool:
        return first & ~self._ball(second) == 0 and second & ~self._ball(first) == 0

    def ball_of(self, subset: int) -> Iterator[int]:
        """Domain elements B with (A, B) ∈ E♭, canonically ordered."""
        reach = self._ball(subset)
        if self.kind == KIND_PAIRS:
            candidates = self.source.window.pairs(reach)
        elif 1 << reach.bit_count() > len(self.domain):
            candidates = (mask for mask in self.domain if mask & ~reach == 0)
        else:
            position = self._position
            candidates = sorted((mask for mask in submasks(reach) if mask in position), key=position.__getitem__)
        balls = self._balls
        for candidate in candidates:
            if candidate in balls and subset & ~balls[candidate] == 0:
                yield candidate

    def pairs(self) -> frozenset:
        return frozenset(
            (first, second) for first in self.domain for second in self.ball_of(first)
        )


def hyper(entourage: Entourage, bornology: BornologyPresentation,
          kind: str = KIND_COVERED) -> HyperEntourage:
    if entourage.window != bornology.window:
        raise StructuralError('Entourage and bornology live on different windows', field='window')
    return HyperEntourage(entourage, kind, domain_for(kind, entourage.window, bornology))


@dataclass(frozen=True)
class SelectorMap:
    """
    A choice function on subsets. ``choices`` maps a subset mask to the
    index of the chosen point.
    """
    window: Window
    kind: str
    choices: Mapping[int, int]

    @classmethod
    def from_function(cls, window: Window, kind: str, domain: Iterable[int],
                      choose: Callable[[int], int]) -> 'SelectorMap':
        return cls(window, kind, {mask: choose(mask) for mask in domain})

    @classmethod
    def from_points(cls, window: Window, kind: str, assignment: Iterable) -> 'SelectorMap':
        """Build from ``(subset, chosen point)`` pairs given as point ids."""
        choices = {}
        for subset, point in assignment:
            choices[window.mask(subset, field='choices')] = window.index_of(point, field='choices')
        return cls(window, kind, choices)

    def choose(self, points: Iterable):
        mask = self.window.mask(points)
        try:
            return self.window.points[self.choices[mask]]
        except KeyError:
            raise StructuralError('Subset outside the selector domain', field='choices') from None

    def domain(self) -> Tuple[int, ...]:
        return tuple(sorted(self.choices, key=subset_key))

    def choice_violations(self) -> Tuple[int, ...]:
        return tuple(mask for mask in self.domain() if not mask >> self.choices[mask] & 1)

    def as_list(self) -> list:
        return [
            {'subset': self.window.labels(mask), 'choice': self.window.label(self.choices[mask])}
            for mask in self.domain()
        ]


@dataclass(frozen=True)
class HyperPresentation:
    """The hyperballean lifts of a presentation's base, over a selector domain."""
    space: CoarsePresentation
    base: Tuple[HyperEntourage, ...]

    @classmethod
    def lift(cls, space: CoarsePresentation, kind: str, domain: Tuple[int, ...]):
        return cls(space, tuple(HyperEntourage(e, kind, domain) for e in space.base))

    @property
    def scales(self):
        return self.space.scales

    def interior_domain(self) -> Tuple[int, ...]:
        interior = self.space.window.interior_mask
        return tuple(mask for mask in self.base[0].domain if mask & ~interior == 0)

    def domain(self) -> Tuple[int, ...]:
        return self.base[0].domain

    def neighbours(self, scale: int, subset: int) -> Iterator[int]:
        return self.base[scale].ball_of(subset)

    def describe(self, subset: int):
        return self.space.window.labels(subset)


def _index_map(mapping, source, target) -> Dict:
    if isinstance(mapping, SelectorMap):
        return dict(mapping.choices)
    window = source.window if isinstance(source, CoarsePresentation) else source.space.window
    if isinstance(mapping, Mapping):
        return {
            window.index_of(point, field='map'): target.window.index_of(image, field='map')
            for point, image in mapping.items()
        }
    return {
        x: target.window.index_of(mapping(window.points[x]), field='map')
        for x in source.domain()
    }


def check_macro_uniform(mapping, source, target: CoarsePresentation) -> dict:
    """
    For each source scale, the least target scale E' with
    f(E[x]) ⊆ E'[f(x)] for every interior x, or NO_MODULUS together with a
    witness pair when no presented target scale works.

    ``mapping`` is a SelectorMap, a mapping of point ids, or a callable on
    point ids. ``source`` is a CoarsePresentation or a HyperPresentation.
    """
    images = _index_map(mapping, source, target)
    missing = [x for x in source.domain() if x not in images]
    if missing:
        raise StructuralError(
            f'Map undefined on {source.describe(missing[0])!r}', field='map',
        )

    modulus = []
    failures = []
    interior = source.interior_domain()
    for scale, label in enumerate(source.scales):
        worst = 0
        failure = None
        for x in interior:
            fx = images[x]
            for y in source.neighbours(scale, x):
                least = target.least_scale(fx, images[y])
                if least is None:
                    failure = {
                        'source_scale': label,
                        'source': source.describe(x),
                        'neighbour': source.describe(y),
                        'image': target.describe(fx),
                        'neighbour_image': target.describe(images[y]),
                    }
                    break
                worst = max(worst, least)
            if failure:
                break
        if failure:
            failures.append(failure)
            modulus.append({'source_scale': label, 'target_scale': NO_MODULUS})
        else:
            modulus.append({'source_scale': label, 'target_scale': target.scales[worst]})

    return {
        'passed': not failures,
        'modulus': modulus,
        'failures': failures,
    }


def check_selector(selector: SelectorMap, space: CoarsePresentation,
                   bornology: Optional[BornologyPresentation] = None) -> dict:
    """
    Verify the choice invariant, then macro-uniformity of the selector as a
    map from the hyperballean (restricted to the selector's domain) to the
    space.
    """
    if selector.window != space.window:
        raise StructuralError('Selector and space live on different windows', field='window')
    window = space.window
    report = {
        'kind': selector.kind,
        'choice_violations': [window.labels(mask) for mask in selector.choice_violations()],
        'domain_missing': [],
        'modulus': [],
        'failures': [],
    }
    if report['choice_violations']:
        report['passed'] = False
        return report

    domain = domain_for(selector.kind, window, bornology)
    missing = [mask for mask in domain if mask not in selector.choices]
    if missing:
        report['domain_missing'] = [window.labels(mask) for mask in missing]
        report['passed'] = False
        return report

    lifted = HyperPresentation.lift(space, selector.kind, domain)
    result = check_macro_uniform(selector, lifted, space)
    report.update(result)
    logger.debug('Selector check over %d subsets: passed=%s', len(domain), result['passed'])
    return report
