"""
Coarse presentations: a window with a finite ascending base of entourages.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import networkx as nx

from .entourages import Entourage, compose, inverse
from .exceptions import StructuralError
from .windows import Window, bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoarsePresentation:
    """
    ``scales`` holds one JSON-ready label per base entourage (a radius, or the
    generating set of a discrete entourage). ``notes`` records construction
    events such as union closure, as dicts.
    """
    window: Window
    base: Tuple[Entourage, ...]
    scales: Tuple = ()
    notes: Tuple[dict, ...] = ()

    def __post_init__(self):
        if not self.base:
            raise StructuralError('A coarse presentation needs at least one entourage', field='base')
        for entourage in self.base:
            if entourage.window != self.window:
                raise StructuralError('Base entourage on a foreign window', field='base')
        if not self.scales:
            object.__setattr__(self, 'scales', tuple(range(len(self.base))))
        if len(self.scales) != len(self.base):
            raise StructuralError('One scale label per base entourage is required', field='scales')

    def interior_domain(self) -> Tuple[int, ...]:
        return self.window.interior_indices()

    def domain(self) -> Tuple[int, ...]:
        return tuple(range(self.window.size))

    def neighbours(self, scale: int, x: int) -> Iterable[int]:
        return bits(self.base[scale].balls[x])

    def least_scale(self, x: int, y: int) -> Optional[int]:
        """Least scale index whose entourage contains (x, y)."""
        for index, entourage in enumerate(self.base):
            if entourage.balls[x] >> y & 1:
                return index
        return None

    def describe(self, x: int):
        return self.window.label(x)


def _least_containing(rows, presentation: CoarsePresentation) -> Optional[int]:
    """Least base index containing ``rows`` on every interior point."""
    interior = presentation.window.interior_indices()
    for index, entourage in enumerate(presentation.base):
        if all(rows[x] & ~entourage.balls[x] == 0 for x in interior):
            return index
    return None


def validate_presentation(presentation: CoarsePresentation) -> dict:
    """
    Check the coarse-structure axioms at window scale.

    Missing diagonals and a non-ascending base are violations. Compositions
    and inverses that no presented entourage absorbs on the interior are
    window truncations, listed separately; they do not fail the check.
    """
    window = presentation.window
    scales = presentation.scales
    violations = []
    truncations = []

    for index, entourage in enumerate(presentation.base):
        missing = entourage.missing_diagonal()
        if missing:
            violations.append({
                'kind': 'missing diagonal',
                'scale': scales[index],
                'points': window.labels(missing),
            })

    for index, (lower, upper) in enumerate(zip(presentation.base, presentation.base[1:])):
        if not lower.issubset(upper):
            violations.append({
                'kind': 'base not ascending',
                'scale': scales[index + 1],
            })

    for i, j in itertools.product(range(len(presentation.base)), repeat=2):
        composed = compose(presentation.base[i], presentation.base[j])
        if _least_containing(composed.balls, presentation) is None:
            truncations.append({
                'kind': 'composition beyond presented scales',
                'scales': [scales[i], scales[j]],
            })
    for index, entourage in enumerate(presentation.base):
        if _least_containing(inverse(entourage).balls, presentation) is None:
            truncations.append({
                'kind': 'inverse beyond presented scales',
                'scale': scales[index],
            })

    components = connected_components(presentation)
    if len(components) > 1:
        logger.info('Presentation splits into %d components within the window', len(components))

    return {
        'passed': not violations,
        'violations': violations,
        'truncations': truncations,
        'connected': len(components) == 1,
        'components': [window.labels(mask) for mask in components],
        'notes': list(presentation.notes),
    }


def connected_components(presentation: CoarsePresentation) -> list:
    """Components of the top entourage, as masks in canonical order."""
    graph = nx.Graph()
    graph.add_nodes_from(range(presentation.window.size))
    graph.add_edges_from(presentation.base[-1].index_pairs())
    masks = [sum(1 << i for i in component) for component in nx.connected_components(graph)]
    return sorted(masks, key=lambda mask: (mask & -mask).bit_length())


def large_subspace_scale(presentation: CoarsePresentation, points: Iterable):
    """Least scale label with E[Y] = X, or None within the window."""
    mask = presentation.window.mask(points)
    for index, entourage in enumerate(presentation.base):
        if entourage.ball_mask(mask) == presentation.window.full_mask:
            return presentation.scales[index]
    return None


def metric_grid_presentation(dims: int, radius: int, radii: Iterable[int],
                             margin: Optional[int] = None) -> CoarsePresentation:
    """
    The sup-metric grid {x ∈ ℤ^dims : d(x, 0) ≤ radius} with base E_r,
    r in ``radii``. Interior points lie within ``radius - margin`` of the
    origin; ``margin`` defaults to the largest radius so every presented ball
    around an interior point is complete.
    """
    if dims not in (1, 2):
        raise StructuralError('Grid windows are 1- or 2-dimensional', field='dims')
    if radius < 0:
        raise StructuralError('Grid radius must be non-negative', field='radius')
    radii = sorted(set(radii))
    if not radii or radii[0] < 0:
        raise StructuralError('Radii must be a nonempty list of non-negative integers', field='radii')
    margin = radii[-1] if margin is None else margin

    coordinates = list(itertools.product(range(-radius, radius + 1), repeat=dims))
    points = [c[0] if dims == 1 else c for c in coordinates]
    interior = [p for p, c in zip(points, coordinates) if _norm(c) <= radius - margin]
    window = Window.build(points, interior=interior, coordinates=tuple(coordinates))

    base = []
    for r in radii:
        balls = []
        for c in coordinates:
            balls.append(sum(
                1 << j for j, other in enumerate(coordinates) if sup_distance(c, other) <= r
            ))
        base.append(Entourage(window, tuple(balls)))
    return CoarsePresentation(window, tuple(base), scales=tuple(radii))


def sup_distance(first, second) -> int:
    return max(abs(a - b) for a, b in zip(first, second))


def _norm(coordinate) -> int:
    return max(abs(a) for a in coordinate)
