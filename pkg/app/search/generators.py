"""
Scenario generators: the antipodal grid and n-gon counterexamples, finite
ordinal sums, graph path metrics and presentation-derived scenarios.
"""
import logging
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx
from django.conf import settings

from coarse.bornologies import BornologyPresentation
from coarse.entourages import Entourage
from coarse.exceptions import StructuralError
from coarse.hyper import KIND_PAIRS, HyperEntourage, SelectorMap
from coarse.presentations import CoarsePresentation, metric_grid_presentation
from coarse.windows import Window, normalize_point
from orders.linear import LinearOrder, interval_bornology

from .constraints import ConstraintScenario

logger = logging.getLogger(__name__)


def _negate(coordinate: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-a for a in coordinate)


def _hyper_close(entourage: Entourage):
    lifted = HyperEntourage(entourage, KIND_PAIRS, ())
    return lifted.related


def grid_remark6_scenario(n: int) -> ConstraintScenario:
    """
    Window {x ∈ ℤ² : d(x, 0) ≤ n + 1}, pairs A_x = {x, −x} for x on the
    sphere S_n, closeness E_1♭, requirement d ≤ n.
    """
    if n < 1:
        raise StructuralError('n must be a positive integer', field='n')
    grid = metric_grid_presentation(2, n + 1, range(1, n + 1), margin=1)
    window = grid.window
    pairs = set()
    for i, coordinate in enumerate(window.coordinates):
        if max(abs(a) for a in coordinate) == n:
            pairs.add((1 << i) | (1 << window.index_of(_negate(coordinate))))
    logger.debug('Antipodal grid scenario n=%d: %d pairs', n, len(pairs))
    return ConstraintScenario.build(window, pairs, _hyper_close(grid.base[0]), grid.base[-1])


def remark6_flip_selector(window: Window) -> SelectorMap:
    """On every 2-subset, the point with lexicographically least coordinates."""
    if window.coordinates is None:
        raise StructuralError('The flip selector needs point coordinates', field='coordinates')
    coordinates = window.coordinates

    def choose(mask: int) -> int:
        low = mask & -mask
        first = low.bit_length() - 1
        second = (mask ^ low).bit_length() - 1
        return second if coordinates[second] < coordinates[first] else first

    return SelectorMap.from_function(window, KIND_PAIRS, window.pairs(), choose)


def _as_fraction(value) -> Fraction:
    try:
        return Fraction(str(value))
    except (TypeError, ValueError, ZeroDivisionError):
        raise StructuralError(f'Not a number: {value!r}', field='distance') from None


def _within(coordinates, distance: Fraction, tolerance: Fraction):
    limit = distance * distance + tolerance

    def test(i: int, j: int) -> bool:
        (x1, y1), (x2, y2) = coordinates[i], coordinates[j]
        return (x1 - x2) ** 2 + (y1 - y2) ** 2 <= limit

    return test


def _distance_entourage(window: Window, test) -> Entourage:
    return Entourage(window, tuple(
        sum(1 << j for j in range(window.size) if test(i, j)) for i in range(window.size)
    ))


def ngon_scenario(n: int, delta, epsilon) -> ConstraintScenario:
    """
    Vertices k = 0..n−1 of the regular n-gon on the unit circle, coordinates
    rounded to settings.BALLEAN_NGON_DENOMINATOR. Pairs are antipodal
    vertices; closeness is E_delta♭, the requirement is distance ≤ epsilon.
    """
    if n < 4 or n % 2:
        raise StructuralError('The n-gon needs an even n ≥ 4', field='n')
    delta, epsilon = _as_fraction(delta), _as_fraction(epsilon)
    if delta <= 0 or epsilon <= 0:
        raise StructuralError('Distances must be positive', field='distance')
    denominator = settings.BALLEAN_NGON_DENOMINATOR
    tolerance = Fraction(settings.BALLEAN_NGON_TOLERANCE)

    coordinates = []
    for k in range(n):
        angle = 2 * math.pi * k / n
        coordinates.append((
            Fraction(round(math.cos(angle) * denominator), denominator),
            Fraction(round(math.sin(angle) * denominator), denominator),
        ))
    window = Window.build(range(n), coordinates=tuple(coordinates))
    half = n // 2
    pairs = [(1 << k) | (1 << (k + half)) for k in range(half)]
    closeness = _distance_entourage(window, _within(coordinates, delta, tolerance))
    requirement = _distance_entourage(window, _within(coordinates, epsilon, tolerance))
    return ConstraintScenario.build(window, pairs, _hyper_close(closeness), requirement)


def ordinal_sum_window(m: int, k: int) -> Tuple[Window, LinearOrder, BornologyPresentation]:
    """
    Points l0..l{m-1}, r0..r{k-1} ordered l{m-1} < … < l0 < r0 < … < r{k-1},
    split (l0, r0), with the interval bornology of that order.
    """
    if m < 1 or k < 1:
        raise StructuralError('Both parts of an ordinal sum need at least one point', field='size')
    left = [f'l{i}' for i in range(m)]
    right = [f'r{i}' for i in range(k)]
    window = Window.build(left + right)
    order = LinearOrder.from_sequence(window, list(reversed(left)) + right, split=('l0', 'r0'))
    return window, order, interval_bornology(order)


def graph_path_scenario(edges: Iterable[Sequence], scales: Iterable[int],
                        points: Optional[Iterable] = None) -> CoarsePresentation:
    """
    Path-metric presentation of a connected graph, one entourage
    {(x, y) : d(x, y) ≤ s} per scale. Vertices follow ``points`` when given,
    otherwise their first appearance in ``edges``.
    """
    graph = nx.Graph()
    if points is not None:
        graph.add_nodes_from(normalize_point(p) for p in points)
    for edge in edges:
        if len(edge) != 2:
            raise StructuralError('Edges are pairs of vertices', field='edges')
        first, second = (normalize_point(p, field='edges') for p in edge)
        if first == second:
            graph.add_node(first)
        else:
            graph.add_edge(first, second)
    if graph.number_of_nodes() == 0:
        raise StructuralError('The graph has no vertices', field='edges')
    if not nx.is_connected(graph):
        raise StructuralError('The graph is not connected', field='edges')
    scales = sorted(set(scales))
    if not scales or scales[0] < 0:
        raise StructuralError('Scales must be a nonempty list of non-negative integers', field='scales')

    window = Window.build(list(graph.nodes))
    distances = dict(nx.all_pairs_shortest_path_length(graph))
    base = []
    for scale in scales:
        balls = []
        for x in window.points:
            row = distances[x]
            balls.append(sum(1 << j for j, y in enumerate(window.points) if row[y] <= scale))
        base.append(Entourage(window, tuple(balls)))
    return CoarsePresentation(window, tuple(base), scales=tuple(scales))


def scenario_from_presentation(space: CoarsePresentation, source_scale, target_scale) -> ConstraintScenario:
    """
    Does ``space`` admit a 2-selector on interior pairs with modulus
    E_source♭ → E_target? Scales are given by label.
    """
    scales = list(space.scales)
    try:
        source = space.base[scales.index(source_scale)]
        target = space.base[scales.index(target_scale)]
    except ValueError:
        raise StructuralError('Unknown scale label', field='scale') from None
    if not target.is_symmetric:
        raise StructuralError('The target scale must be symmetric', field='scale')
    window = space.window
    return ConstraintScenario.build(
        window, window.pairs(window.interior_mask), _hyper_close(source), target,
    )
