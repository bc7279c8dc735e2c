"""
Build domain objects from a validated scenario.

Every section is resolved against the window, so an unknown point id raises
StructuralError naming the section it came from.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

from coarse.bornologies import BornologyPresentation, bounded_sets_bornology, discrete_from_bornology
from coarse.entourages import Entourage
from coarse.exceptions import StructuralError
from coarse.presentations import CoarsePresentation, metric_grid_presentation
from coarse.windows import Window
from orders.linear import ChainBase, LinearOrder, interval_bornology
from search.generators import graph_path_scenario, ngon_scenario, ordinal_sum_window

from . import serializers as schema

logger = logging.getLogger(__name__)


@dataclass
class Scenario:
    """A parsed scenario: the window and whatever structure the file presents."""
    data: dict
    window: Window
    space: Optional[CoarsePresentation] = None
    bornology: Optional[BornologyPresentation] = None
    order: Optional[LinearOrder] = None
    chain: Optional[ChainBase] = None
    notes: list = field(default_factory=list)

    @property
    def task(self) -> str:
        return self.data['task']['name']

    @property
    def params(self) -> dict:
        return dict(self.data['task'].get('params') or {})

    @property
    def window_spec(self) -> dict:
        return self.data['window']


def _grid_shape(spec: dict, coarse: dict):
    """(dims, radius, radii, margin) of a grid window."""
    n = spec.get('n')
    if n is not None:
        radii = (coarse or {}).get('radii') or list(range(1, n + 1))
        margin = spec.get('margin')
        return 2, n + 1, radii, 1 if margin is None else margin
    radii = (coarse or {}).get('radii')
    if not radii:
        raise StructuralError('A grid window needs coarse radii', field='coarse.radii')
    return spec['dims'], spec['radius'], radii, spec.get('margin')


def _build_window(data: dict, scenario: Scenario):
    spec = data['window']
    coarse = data.get('coarse')
    kind = spec['kind']

    if kind == schema.WINDOW_EXPLICIT:
        scenario.window = Window.build(spec['points'], interior=spec.get('interior'))
    elif kind == schema.WINDOW_GRID:
        if coarse is not None and coarse['kind'] != schema.COARSE_METRIC:
            raise StructuralError('Grid windows carry a metric coarse structure', field='coarse.kind')
        scenario.space = metric_grid_presentation(*_grid_shape(spec, coarse))
        scenario.window = scenario.space.window
    elif kind == schema.WINDOW_NGON:
        # Geometry and closeness depend on the task's distances; the window alone is fixed.
        params = data['task'].get('params') or {}
        generated = ngon_scenario(spec['n'], params.get('delta', 1), params.get('epsilon', 1))
        scenario.window = generated.window
    elif kind == schema.WINDOW_ORDINAL_SUM:
        window, order, born = ordinal_sum_window(spec['m'], spec['k'])
        scenario.window, scenario.order, scenario.bornology = window, order, born
    elif kind == schema.WINDOW_GRAPH:
        if coarse is None or coarse['kind'] != schema.COARSE_GRAPH:
            raise StructuralError('Graph windows need a graph coarse structure', field='coarse.kind')
        scenario.space = graph_path_scenario(spec['edges'], coarse['scales'], points=spec.get('points'))
        scenario.window = scenario.space.window


def _build_order(data: dict, scenario: Scenario):
    spec = data.get('order')
    if spec is None:
        return
    try:
        scenario.order = LinearOrder.from_sequence(scenario.window, spec['sequence'], split=spec.get('split'))
    except StructuralError as error:
        raise StructuralError(str(error), field=f'order.{error.field}') from None


def _build_bornology(data: dict, scenario: Scenario):
    spec = data.get('bornology')
    if spec is None:
        return
    window = scenario.window
    kind = spec['kind']
    if kind == schema.BORNOLOGY_EXPLICIT:
        scenario.bornology = BornologyPresentation.from_sets(window, spec['sets'])
    elif kind == schema.BORNOLOGY_CHAIN:
        scenario.chain = ChainBase.from_sets(window, spec['sets'], spec.get('enumerations'))
        scenario.bornology = scenario.chain.bornology()
    elif kind == schema.BORNOLOGY_INTERVAL:
        if scenario.order is None:
            raise StructuralError('An interval bornology needs an order', field='bornology.kind')
        scenario.bornology = interval_bornology(scenario.order)
    elif kind == schema.BORNOLOGY_BOUNDED:
        if scenario.space is None:
            raise StructuralError('The bornology of bounded sets needs a coarse structure', field='bornology.kind')
        scenario.bornology = bounded_sets_bornology(scenario.space)


def _build_coarse(data: dict, scenario: Scenario):
    spec = data.get('coarse')
    if spec is None or scenario.space is not None or spec['kind'] == schema.COARSE_DISCRETE:
        return
    window = scenario.window
    kind = spec['kind']
    if kind == schema.COARSE_EXPLICIT:
        base = tuple(
            Entourage.from_pairs(window, relation['pairs'], reflexive=relation['reflexive'],
                                 field='coarse.relations')
            for relation in spec['relations']
        )
        labels = tuple(relation.get('scale', index) for index, relation in enumerate(spec['relations']))
        scenario.space = CoarsePresentation(window, base, scales=labels)
    else:
        raise StructuralError(f'Coarse kind "{kind}" does not fit this window', field='coarse.kind')


def _build_discrete(data: dict, scenario: Scenario):
    spec = data.get('coarse')
    if spec is None or spec['kind'] != schema.COARSE_DISCRETE:
        return
    if scenario.bornology is None:
        raise StructuralError('A discrete coarse structure needs a bornology', field='coarse.kind')
    scenario.space = discrete_from_bornology(scenario.bornology)


def _prefixed(section: str, error: StructuralError) -> StructuralError:
    if not error.field:
        return StructuralError(str(error), field=section)
    if '.' in error.field:
        return error
    return StructuralError(str(error), field=f'{section}.{error.field}')


def build_scenario(data: dict) -> Scenario:
    """
    Resolve a validated scenario in dependency order: window, order, an
    explicit coarse structure, bornology, then the discrete space of the
    bornology when asked for.

    Raises:
        StructuralError: whose ``field`` names the offending section.
    """
    scenario = Scenario(data=data, window=None)
    for section, step in (
        ('window', _build_window),
        ('order', _build_order),
        ('coarse', _build_coarse),
        ('bornology', _build_bornology),
        ('coarse', _build_discrete),
    ):
        try:
            step(data, scenario)
        except StructuralError as error:
            raise _prefixed(section, error) from None
    logger.debug('Scenario window has %d points', scenario.window.size)
    return scenario
