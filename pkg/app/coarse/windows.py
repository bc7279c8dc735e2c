"""
Finite point windows.

A window is the ground set of every presentation. Subsets of a window are
handled as integer bitmasks over the canonical enumeration: bit ``i`` stands
for ``window.points[i]``. The enumeration order breaks every tie.
"""
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Optional, Tuple

from .exceptions import StructuralError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices set in ``mask`` in ascending (canonical) order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every nonempty submask of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def subset_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Canonical sort key for subsets: size first, then member indices."""
    return mask.bit_count(), tuple(bits(mask))


def normalize_point(raw, field: str = 'points'):
    """JSON arrays arrive as lists; point ids are hashable, so use tuples."""
    if isinstance(raw, list):
        return tuple(normalize_point(item, field=field) for item in raw)
    try:
        hash(raw)
    except TypeError:
        raise StructuralError(f'Point ids must be numbers, strings or arrays, not {raw!r}', field=field) from None
    return raw


@dataclass(frozen=True)
class Window:
    """
    Ordered finite set of opaque point ids.

    ``interior_mask`` flags the points whose balls are fully represented;
    universally quantified checks range over those only. ``coordinates`` is
    optional geometric data attached by scenario generators.
    """
    points: Tuple[Hashable, ...]
    interior_mask: int
    coordinates: Optional[Tuple[Tuple, ...]] = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for i, point in enumerate(self.points):
            if point in index:
                raise StructuralError(f'Duplicate point id {point!r}', field='points')
            index[point] = i
        object.__setattr__(self, '_index', index)
        if self.interior_mask & ~self.full_mask:
            raise StructuralError('Interior is not a subset of the window', field='interior')
        if self.coordinates is not None and len(self.coordinates) != len(self.points):
            raise StructuralError('One coordinate tuple per point is required', field='coordinates')

    @classmethod
    def build(cls, points: Iterable, interior: Optional[Iterable] = None, coordinates=None):
        points = tuple(normalize_point(p) for p in points)
        window = cls(points=points, interior_mask=(1 << len(points)) - 1, coordinates=coordinates)
        if interior is None:
            return window
        return cls(points=points, interior_mask=window.mask(interior, field='interior'),
                   coordinates=coordinates)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def index_of(self, point, field: str = 'points') -> int:
        point = normalize_point(point, field=field)
        try:
            return self._index[point]
        except (KeyError, TypeError):
            raise StructuralError(f'Unknown point id {point!r}', field=field) from None

    def mask(self, points: Iterable, field: str = 'points') -> int:
        result = 0
        for point in points:
            result |= 1 << self.index_of(point, field=field)
        return result

    def points_of(self, mask: int) -> Tuple[Hashable, ...]:
        return tuple(self.points[i] for i in bits(mask))

    def subset(self, mask: int) -> frozenset:
        return frozenset(self.points_of(mask))

    def is_interior(self, i: int) -> bool:
        return bool(self.interior_mask >> i & 1)

    def interior_indices(self) -> Tuple[int, ...]:
        return tuple(bits(self.interior_mask))

    def label(self, i: int):
        """JSON-ready form of point ``i`` (tuples become lists)."""
        return _jsonable(self.points[i])

    def labels(self, mask: int) -> list:
        return [self.label(i) for i in bits(mask)]

    def pairs(self, mask: Optional[int] = None) -> Iterator[int]:
        """All 2-subsets of ``mask`` (default: the window), canonically ordered."""
        members = list(bits(self.full_mask if mask is None else mask))
        for a, i in enumerate(members):
            for j in members[a + 1:]:
                yield (1 << i) | (1 << j)

    def subwindow(self, mask: int) -> 'Window':
        coordinates = None
        if self.coordinates is not None:
            coordinates = tuple(self.coordinates[i] for i in bits(mask))
        points = self.points_of(mask)
        interior = tuple(self.points[i] for i in bits(mask & self.interior_mask))
        return Window.build(points, interior=interior, coordinates=coordinates)


def _jsonable(point):
    if isinstance(point, tuple):
        return [_jsonable(item) for item in point]
    return point
