"""
Entourage algebra on a finite window.

An entourage is stored as its family of balls: ``balls[i]`` is the bitmask of
E[x_i]. Composition follows (x, y) ∈ E∘F iff ∃z (x, z) ∈ E and (z, y) ∈ F,
so the ball of E∘F at x is the F-ball of the E-ball of x.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Tuple

from .exceptions import StructuralError
from .windows import Window, bits


@dataclass(frozen=True)
class Entourage:
    window: Window
    balls: Tuple[int, ...]

    def __post_init__(self):
        if len(self.balls) != self.window.size:
            raise StructuralError('One ball per window point is required', field='balls')

    @classmethod
    def diagonal(cls, window: Window) -> 'Entourage':
        return cls(window, tuple(1 << i for i in range(window.size)))

    @classmethod
    def full(cls, window: Window) -> 'Entourage':
        return cls(window, (window.full_mask,) * window.size)

    @classmethod
    def from_pairs(cls, window: Window, pairs: Iterable, reflexive: bool = True,
                   field: str = 'relation') -> 'Entourage':
        """
        Build from ``(x, y)`` point-id pairs. The diagonal is added unless
        ``reflexive`` is False, which keeps raw relations for validation.
        """
        balls = [1 << i if reflexive else 0 for i in range(window.size)]
        for x, y in pairs:
            balls[window.index_of(x, field=field)] |= 1 << window.index_of(y, field=field)
        return cls(window, tuple(balls))

    @classmethod
    def from_balls(cls, window: Window, balls: Mapping) -> 'Entourage':
        """Build from a mapping point id -> iterable of point ids."""
        masks = [1 << i for i in range(window.size)]
        for point, ball_points in balls.items():
            masks[window.index_of(point)] |= window.mask(ball_points)
        return cls(window, tuple(masks))

    def contains(self, x, y) -> bool:
        return bool(self.balls[self.window.index_of(x)] >> self.window.index_of(y) & 1)

    def ball_mask(self, mask: int) -> int:
        result = 0
        for i in bits(mask):
            result |= self.balls[i]
        return result

    def index_pairs(self) -> Iterator[Tuple[int, int]]:
        for i, ball in enumerate(self.balls):
            for j in bits(ball):
                yield i, j

    def pairs(self) -> frozenset:
        points = self.window.points
        return frozenset((points[i], points[j]) for i, j in self.index_pairs())

    def missing_diagonal(self) -> int:
        """Mask of the points x with x ∉ E[x]."""
        return sum(1 << i for i, ball in enumerate(self.balls) if not ball >> i & 1)

    @property
    def is_reflexive(self) -> bool:
        return self.missing_diagonal() == 0

    @property
    def is_symmetric(self) -> bool:
        return self == inverse(self)

    def issubset(self, other: 'Entourage') -> bool:
        _same_window(self, other)
        return all(mine & ~theirs == 0 for mine, theirs in zip(self.balls, other.balls))

    def intersection(self, other: 'Entourage') -> 'Entourage':
        _same_window(self, other)
        return Entourage(self.window, tuple(a & b for a, b in zip(self.balls, other.balls)))


def _same_window(first: Entourage, second: Entourage):
    if first.window != second.window:
        raise StructuralError('Entourages live on different windows', field='window')


def compose(first: Entourage, second: Entourage) -> Entourage:
    _same_window(first, second)
    return Entourage(first.window, tuple(second.ball_mask(ball) for ball in first.balls))


def inverse(entourage: Entourage) -> Entourage:
    transposed = [0] * entourage.window.size
    for i, j in entourage.index_pairs():
        transposed[j] |= 1 << i
    return Entourage(entourage.window, tuple(transposed))


def union(first: Entourage, second: Entourage) -> Entourage:
    _same_window(first, second)
    return Entourage(first.window, tuple(a | b for a, b in zip(first.balls, second.balls)))


def ball(entourage: Entourage, points: Iterable) -> frozenset:
    """E[A] = ∪_{a ∈ A} E[a], as a set of point ids."""
    window = entourage.window
    return window.subset(entourage.ball_mask(window.mask(points)))


def restrict(entourage: Entourage, points: Iterable) -> Entourage:
    """E ∩ (Y × Y) on the subwindow Y."""
    window = entourage.window
    keep = window.mask(points)
    sub = window.subwindow(keep)
    balls = []
    for i in bits(keep):
        balls.append(sub.mask(window.points_of(entourage.balls[i] & keep)))
    return Entourage(sub, tuple(balls))
