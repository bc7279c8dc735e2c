"""
One function per scenario task. Each returns ``(outcome, payload)``;
InconclusiveError and PreconditionError are turned into reports by the
runner.
"""
import logging

from coarse.bornologies import discrete_from_bornology, validate_bornology
from coarse.exceptions import StructuralError
from coarse.hyper import KIND_COVERED, KIND_PAIRS, SelectorMap, check_selector
from coarse.presentations import validate_presentation
from orders.derivation import derive_order
from orders.linear import compare_coverage, interval_base_from_chain, interval_bornology, ordinal_sum_shape
from orders.selectors import selector_from_split_order, two_selector_from_order
from orders.transfer import theorem5_transfer
from search.constraints import brute_force_two_selector
from search.generators import (
    grid_remark6_scenario, ngon_scenario, remark6_flip_selector, scenario_from_presentation,
)
from search.solver import FOUND, UNSAT, replay_certificate, search_two_selector

from . import serializers as schema
from .reports import FAIL, PASS
from .scenarios import Scenario

logger = logging.getLogger(__name__)


def _passed(flag: bool) -> str:
    return PASS if flag else FAIL


def _need(value, message: str, field: str):
    if value is None:
        raise StructuralError(message, field=field)
    return value


def resolve_selector(scenario: Scenario, default_kind: str) -> SelectorMap:
    """The selector named by ``params.selector``; an order's min-selector by default."""
    spec = scenario.params.get('selector') or {}
    source = spec.get('source', schema.SELECTOR_FROM_ORDER)
    window = scenario.window
    if source == schema.SELECTOR_FROM_ORDER:
        order = _need(scenario.order, 'The selector source "order" needs an order', 'order')
        return two_selector_from_order(order)
    if source == schema.SELECTOR_FROM_SPLIT_ORDER:
        order = _need(scenario.order, 'The selector source "split-order" needs an order', 'order')
        return selector_from_split_order(order)
    if source == schema.SELECTOR_FROM_FLIP:
        return remark6_flip_selector(window)
    assignment = [(choice['subset'], choice['choice']) for choice in spec['choices']]
    try:
        return SelectorMap.from_points(window, default_kind, assignment)
    except StructuralError as error:
        raise StructuralError(str(error), field='task.params.selector.choices') from None


def validate(scenario: Scenario, options: dict):
    payload = {}
    if scenario.space is not None:
        payload['presentation'] = validate_presentation(scenario.space)
    if scenario.bornology is not None:
        payload['bornology'] = validate_bornology(scenario.bornology)
    if scenario.order is not None:
        payload['order'] = dict(scenario.order.as_dict(), ordinal_sum=ordinal_sum_shape(scenario.order))
    if not payload:
        raise StructuralError('Nothing to validate: give a coarse structure, bornology or order', field='coarse')
    return _passed(all(section.get('passed', True) for section in payload.values())), payload


def check_any_selector(scenario: Scenario, options: dict):
    space = _need(scenario.space, 'Checking a selector needs a coarse structure', 'coarse')
    selector = resolve_selector(scenario, KIND_COVERED)
    if selector.kind == KIND_COVERED and scenario.bornology is None:
        raise StructuralError('A selector on bounded sets needs a bornology', field='bornology')
    report = check_selector(selector, space, scenario.bornology)
    return _passed(report['passed']), {'check': report, 'domain_size': len(selector.choices)}


def check_two_selector(scenario: Scenario, options: dict):
    space = _need(scenario.space, 'Checking a 2-selector needs a coarse structure', 'coarse')
    selector = resolve_selector(scenario, KIND_PAIRS)
    if selector.kind != KIND_PAIRS:
        raise StructuralError('The selector is not defined on 2-subsets', field='task.params.selector')
    report = check_selector(selector, space)
    return _passed(report['passed']), {'check': report, 'domain_size': len(selector.choices)}


def derive_order_task(scenario: Scenario, options: dict):
    born = _need(scenario.bornology, 'Deriving an order needs a bornology', 'bornology')
    selector = resolve_selector(scenario, KIND_PAIRS)
    params = scenario.params
    try:
        derivation = derive_order(selector, born, split=params.get('split'), verify=params.get('verify', True))
    except StructuralError as error:
        if error.field != 'choices':
            raise
        raise StructuralError(str(error), field='task.params.selector.choices') from None
    return _passed(derivation.coverage['equal']), {'derivation': derivation.as_dict()}


def derive_selector(scenario: Scenario, options: dict):
    order = _need(scenario.order, 'Deriving a selector needs an order', 'order')
    born = scenario.bornology or interval_bornology(order)
    if order.split is None:
        selector = two_selector_from_order(order)
    else:
        selector = selector_from_split_order(order)
    report = check_selector(selector, discrete_from_bornology(born), born)
    return _passed(report['passed']), {
        'order': order.as_dict(),
        'selector': selector.as_list(),
        'check': report,
    }


def derive_interval_base(scenario: Scenario, options: dict):
    chain = _need(scenario.chain, 'Deriving an interval base needs a chain bornology', 'bornology')
    order = interval_base_from_chain(chain)
    coverage = compare_coverage(interval_bornology(order), chain.bornology())
    return _passed(coverage['equal']), {'order': order.as_dict(), 'coverage': coverage}


def _constraint_scenario(scenario: Scenario):
    spec = scenario.window_spec
    params = scenario.params
    if spec['kind'] == schema.WINDOW_GRID and spec.get('n') is not None:
        return grid_remark6_scenario(spec['n'])
    if spec['kind'] == schema.WINDOW_NGON:
        return ngon_scenario(spec['n'], params['delta'], params['epsilon'])
    space = _need(scenario.space, 'Searching needs a generated scenario or a coarse structure', 'coarse')
    return scenario_from_presentation(
        space,
        params.get('source_scale', space.scales[0]),
        params.get('target_scale', space.scales[-1]),
    )


def search(scenario: Scenario, options: dict):
    try:
        constraints = _constraint_scenario(scenario)
    except StructuralError as error:
        raise StructuralError(str(error), field=f'task.params.{error.field}') from None
    outcome = search_two_selector(constraints, max_steps=options.get('max_steps'))
    payload = {'scenario': constraints.describe(), 'result': outcome.as_dict()}
    if outcome.kind == UNSAT:
        payload['certificate_replayed'] = replay_certificate(constraints, outcome.certificate)
    if scenario.params.get('oracle'):
        oracle = brute_force_two_selector(constraints)
        payload['oracle'] = {
            'found': oracle is not None,
            'agrees': (oracle is not None) == (outcome.kind == FOUND)
            and (oracle is None or oracle.choices == outcome.witness.choices),
        }
    return outcome.kind, payload


def transfer(scenario: Scenario, options: dict):
    space = _need(scenario.space, 'The transfer needs a coarse structure', 'coarse')
    selector = resolve_selector(scenario, KIND_PAIRS)
    if selector.kind != KIND_PAIRS:
        raise StructuralError('The transfer starts from a 2-selector', field='task.params.selector')
    report = theorem5_transfer(selector, space)
    return _passed(report['passed']), {'transfer': report}


TASKS = {
    schema.TASK_VALIDATE: validate,
    schema.TASK_CHECK_SELECTOR: check_any_selector,
    schema.TASK_CHECK_TWO_SELECTOR: check_two_selector,
    schema.TASK_DERIVE_ORDER: derive_order_task,
    schema.TASK_DERIVE_SELECTOR: derive_selector,
    schema.TASK_DERIVE_INTERVAL_BASE: derive_interval_base,
    schema.TASK_SEARCH: search,
    schema.TASK_TRANSFER: transfer,
}
