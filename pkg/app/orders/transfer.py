"""
Carrying a 2-selector of a coarse space over to the discrete space of its
bounded sets.
"""
import logging

from coarse.bornologies import bounded_sets_bornology, discrete_from_bornology, union_closure_chain
from coarse.entourages import inverse, union
from coarse.hyper import NO_MODULUS, SelectorMap, check_selector
from coarse.presentations import CoarsePresentation

logger = logging.getLogger(__name__)


def _expected_modulus(space: CoarsePresentation, report: dict, chain) -> list:
    """
    For each discrete scale E_B, the scale E_{F[B]} where F is the symmetric
    hull of the modulus of the top source scale.
    """
    window = space.window
    top = report['modulus'][-1]['target_scale']
    if top == NO_MODULUS:
        return []
    target = space.base[list(space.scales).index(top)]
    hull = union(target, inverse(target))
    expected = []
    for generator in chain:
        spread = hull.ball_mask(generator)
        index = next((i for i, element in enumerate(chain) if spread & ~element == 0), None)
        expected.append({
            'source_scale': window.labels(generator),
            'target_scale': NO_MODULUS if index is None else window.labels(chain[index]),
        })
    return expected


def theorem5_transfer(selector: SelectorMap, space: CoarsePresentation) -> dict:
    """
    Check ``selector`` on ``space``, then on the discrete space X_B of its
    bounded sets.

    Returns:
        dict with the two check reports, the expected discrete modulus and
        ``within_expected``, which compares the actual discrete modulus with
        the expected one scale by scale.
    """
    precondition = check_selector(selector, space)
    report = {
        'precondition': precondition,
        'discrete': None,
        'expected_modulus': [],
        'within_expected': None,
        'passed': False,
    }
    if not precondition['passed']:
        logger.info('Transfer skipped: selector fails on the source space')
        return report

    born = bounded_sets_bornology(space)
    chain, _ = union_closure_chain(born)
    discrete = discrete_from_bornology(born)
    discrete_report = check_selector(selector, discrete)
    report['discrete'] = discrete_report
    report['expected_modulus'] = _expected_modulus(space, precondition, chain)

    labels = [space.window.labels(element) for element in chain]
    within = True
    for actual, expected in zip(discrete_report['modulus'], report['expected_modulus']):
        if expected['target_scale'] == NO_MODULUS:
            continue
        if actual['target_scale'] == NO_MODULUS:
            within = False
        elif labels.index(actual['target_scale']) > labels.index(expected['target_scale']):
            within = False
    report['within_expected'] = within
    report['passed'] = discrete_report['passed']
    return report
