"""Exhaustive algebraic laws over relations on four points."""
import itertools

from coarse.entourages import Entourage, compose, inverse
from coarse.hyper import KIND_COVERED, HyperEntourage
from coarse.windows import Window, submasks

WINDOW = Window.build(range(4))
DIAGONAL = tuple(1 << i for i in range(4))


def _relation(pairs, reflexive=True) -> Entourage:
    balls = list(DIAGONAL) if reflexive else [0] * 4
    for x, y in pairs:
        balls[x] |= 1 << y
    return Entourage(WINDOW, tuple(balls))


def structured_relations():
    """Diagonal, full, empty, orders, cycles, stars and single-edge extensions."""
    points = range(4)
    relations = [
        _relation([]),
        _relation([], reflexive=False),
        _relation(itertools.product(points, points)),
        _relation((x, y) for x in points for y in points if x < y),
        _relation((x, y) for x in points for y in points if x > y),
        _relation((x, (x + 1) % 4) for x in points),
        _relation(((x + 1) % 4, x) for x in points),
        _relation(((x, (x + 1) % 4) for x in points), reflexive=False),
        _relation([(0, y) for y in points], reflexive=False),
        _relation([(x, 0) for x in points], reflexive=False),
    ]
    relations.extend(_relation([(x, y)]) for x in points for y in points if x != y)
    return relations


def reflexive_relations():
    """All 4096 reflexive relations."""
    off_diagonal = [(x, y) for x in range(4) for y in range(4) if x != y]
    for chosen in range(1 << len(off_diagonal)):
        yield _relation(pair for k, pair in enumerate(off_diagonal) if chosen >> k & 1)


SUBSETS = tuple(submasks(WINDOW.full_mask))


class TestStructuredGenerator:
    def test_enough_cases(self):
        relations = structured_relations()

        assert len(relations) == 22
        assert len(set(relations)) == 22
        assert len(relations) ** 3 >= 10 ** 4


class TestCompositionLaws:
    def test_associative_on_every_triple(self):
        relations = structured_relations()
        cache = {}

        def composed(first, second):
            key = (first, second)
            if key not in cache:
                cache[key] = compose(first, second)
            return cache[key]

        for first, second, third in itertools.product(relations, repeat=3):
            assert composed(composed(first, second), third) == composed(first, composed(second, third))

    def test_inverse_reverses_composition(self):
        relations = structured_relations()

        for first, second in itertools.product(relations, repeat=2):
            assert inverse(compose(first, second)) == compose(inverse(second), inverse(first))


class TestInverseLaws:
    def test_involution_on_every_reflexive_relation(self):
        for entourage in reflexive_relations():
            assert inverse(inverse(entourage)) == entourage


class TestHyperLaws:
    def test_monotone_on_every_pair(self):
        relations = structured_relations()

        for smaller, larger in itertools.product(relations, repeat=2):
            if not smaller.issubset(larger):
                continue
            small = HyperEntourage(smaller, KIND_COVERED, SUBSETS)
            large = HyperEntourage(larger, KIND_COVERED, SUBSETS)
            for first, second in itertools.product(SUBSETS, repeat=2):
                if small.related(first, second):
                    assert large.related(first, second)

    def test_singletons_recover_symmetric_core(self):
        for entourage in reflexive_relations():
            lifted = HyperEntourage(entourage, KIND_COVERED, SUBSETS)
            core = entourage.intersection(inverse(entourage))
            for x, y in itertools.product(range(4), repeat=2):
                assert lifted.related(1 << x, 1 << y) == core.contains(x, y)
