"""
Scenario schema, version 1.

A scenario file is one JSON object with ``version``, ``window``, ``task`` and
the optional ``coarse``, ``bornology`` and ``order`` sections. Point ids are
JSON scalars or arrays; arrays stand for tuples.
"""
from django.conf import settings
from rest_framework import serializers

WINDOW_EXPLICIT = 'explicit'
WINDOW_GRID = 'grid'
WINDOW_NGON = 'ngon'
WINDOW_ORDINAL_SUM = 'ordinal_sum'
WINDOW_GRAPH = 'graph'

WINDOW_KIND_CHOICES = [WINDOW_EXPLICIT, WINDOW_GRID, WINDOW_NGON, WINDOW_ORDINAL_SUM, WINDOW_GRAPH]

COARSE_METRIC = 'metric'
COARSE_GRAPH = 'graph'
COARSE_DISCRETE = 'discrete'
COARSE_EXPLICIT = 'explicit'

COARSE_KIND_CHOICES = [COARSE_METRIC, COARSE_GRAPH, COARSE_DISCRETE, COARSE_EXPLICIT]

BORNOLOGY_EXPLICIT = 'explicit'
BORNOLOGY_INTERVAL = 'interval'
BORNOLOGY_CHAIN = 'chain'
BORNOLOGY_BOUNDED = 'bounded'

BORNOLOGY_KIND_CHOICES = [BORNOLOGY_EXPLICIT, BORNOLOGY_INTERVAL, BORNOLOGY_CHAIN, BORNOLOGY_BOUNDED]

TASK_VALIDATE = 'validate'
TASK_CHECK_SELECTOR = 'check-selector'
TASK_CHECK_TWO_SELECTOR = 'check-two-selector'
TASK_DERIVE_ORDER = 'derive-order'
TASK_DERIVE_SELECTOR = 'derive-selector'
TASK_DERIVE_INTERVAL_BASE = 'derive-interval-base'
TASK_SEARCH = 'search'
TASK_TRANSFER = 'transfer-theorem5'

TASK_CHOICES = [
    TASK_VALIDATE, TASK_CHECK_SELECTOR, TASK_CHECK_TWO_SELECTOR, TASK_DERIVE_ORDER,
    TASK_DERIVE_SELECTOR, TASK_DERIVE_INTERVAL_BASE, TASK_SEARCH, TASK_TRANSFER,
]

SELECTOR_FROM_ORDER = 'order'
SELECTOR_FROM_SPLIT_ORDER = 'split-order'
SELECTOR_FROM_FLIP = 'flip'
SELECTOR_FROM_CHOICES = 'choices'

SELECTOR_SOURCE_CHOICES = [
    SELECTOR_FROM_ORDER, SELECTOR_FROM_SPLIT_ORDER, SELECTOR_FROM_FLIP, SELECTOR_FROM_CHOICES,
]

# Bounds keep generated windows small enough for exhaustive checks.
MAX_GRID_RADIUS = 8
MAX_NGON_N = 64
MAX_ORDINAL_PART = 32
MAX_REMARK6_N = 6


def _require(data, kind, *names):
    missing = {name: f'This field is required for kind "{kind}".' for name in names if data.get(name) is None}
    if missing:
        raise serializers.ValidationError(missing)


class PointListField(serializers.ListField):
    child = serializers.JSONField()


class WindowSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=WINDOW_KIND_CHOICES)
    points = PointListField(required=False)
    interior = PointListField(required=False, allow_null=True)
    # grid
    n = serializers.IntegerField(required=False, min_value=1)
    dims = serializers.IntegerField(required=False, min_value=1, max_value=2)
    radius = serializers.IntegerField(required=False, min_value=0, max_value=MAX_GRID_RADIUS)
    margin = serializers.IntegerField(required=False, min_value=0, allow_null=True)
    # ordinal sum
    m = serializers.IntegerField(required=False, min_value=1, max_value=MAX_ORDINAL_PART)
    k = serializers.IntegerField(required=False, min_value=1, max_value=MAX_ORDINAL_PART)
    # graph
    edges = serializers.ListField(child=PointListField(min_length=2, max_length=2), required=False)

    def validate(self, data):
        kind = data['kind']
        if kind == WINDOW_EXPLICIT:
            _require(data, kind, 'points')
            if not data['points']:
                raise serializers.ValidationError({'points': 'A window needs at least one point.'})
        elif kind == WINDOW_GRID:
            if data.get('n') is None:
                _require(data, kind, 'dims', 'radius')
            elif data['n'] > MAX_REMARK6_N:
                raise serializers.ValidationError({'n': f'Ensure this value is less than or equal to {MAX_REMARK6_N}.'})
        elif kind == WINDOW_NGON:
            _require(data, kind, 'n')
            if data['n'] < 4 or data['n'] % 2 or data['n'] > MAX_NGON_N:
                raise serializers.ValidationError({'n': f'The n-gon needs an even n between 4 and {MAX_NGON_N}.'})
        elif kind == WINDOW_ORDINAL_SUM:
            _require(data, kind, 'm', 'k')
        elif kind == WINDOW_GRAPH:
            _require(data, kind, 'edges')
        return data


class RelationSerializer(serializers.Serializer):
    scale = serializers.JSONField(required=False)
    pairs = serializers.ListField(child=PointListField(min_length=2, max_length=2))
    reflexive = serializers.BooleanField(default=True)


class CoarseSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=COARSE_KIND_CHOICES)
    radii = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False, min_length=1)
    scales = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False, min_length=1)
    relations = RelationSerializer(many=True, required=False)

    def validate(self, data):
        kind = data['kind']
        if kind == COARSE_GRAPH:
            _require(data, kind, 'scales')
        elif kind == COARSE_EXPLICIT:
            _require(data, kind, 'relations')
            if not data['relations']:
                raise serializers.ValidationError({'relations': 'At least one relation is required.'})
        return data


class BornologySerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=BORNOLOGY_KIND_CHOICES)
    sets = serializers.ListField(child=PointListField(min_length=1), required=False)
    enumerations = serializers.ListField(child=PointListField(), required=False, allow_null=True)

    def validate(self, data):
        kind = data['kind']
        if kind in (BORNOLOGY_EXPLICIT, BORNOLOGY_CHAIN):
            _require(data, kind, 'sets')
        if kind == BORNOLOGY_CHAIN and not data['sets']:
            raise serializers.ValidationError({'sets': 'A chain needs at least one set.'})
        return data


class OrderSerializer(serializers.Serializer):
    sequence = PointListField(min_length=1)
    split = PointListField(min_length=2, max_length=2, required=False, allow_null=True)


class SelectorChoiceSerializer(serializers.Serializer):
    subset = PointListField(min_length=1)
    choice = serializers.JSONField()


class SelectorSerializer(serializers.Serializer):
    source = serializers.ChoiceField(choices=SELECTOR_SOURCE_CHOICES, default=SELECTOR_FROM_ORDER)
    choices = SelectorChoiceSerializer(many=True, required=False)

    def validate(self, data):
        if data['source'] == SELECTOR_FROM_CHOICES:
            _require(data, data['source'], 'choices')
        return data


class TaskParamsSerializer(serializers.Serializer):
    """Parameters shared by the tasks; each task reads the ones it needs."""
    selector = SelectorSerializer(required=False)
    split = PointListField(min_length=2, max_length=2, required=False, allow_null=True)
    verify = serializers.BooleanField(default=True)
    # search
    delta = serializers.CharField(required=False)
    epsilon = serializers.CharField(required=False)
    source_scale = serializers.JSONField(required=False)
    target_scale = serializers.JSONField(required=False)
    oracle = serializers.BooleanField(default=False)

    def to_internal_value(self, data):
        # Distances may be written as JSON numbers; keep their decimal text.
        if isinstance(data, dict):
            data = {
                key: str(value) if key in ('delta', 'epsilon') and isinstance(value, (int, float)) else value
                for key, value in data.items()
            }
        return super().to_internal_value(data)


class TaskSerializer(serializers.Serializer):
    name = serializers.ChoiceField(choices=TASK_CHOICES)
    params = TaskParamsSerializer(required=False, default=dict)


class ScenarioSerializer(serializers.Serializer):
    version = serializers.IntegerField()
    window = WindowSerializer()
    coarse = CoarseSerializer(required=False)
    bornology = BornologySerializer(required=False)
    order = OrderSerializer(required=False)
    task = TaskSerializer()

    def validate_version(self, value):
        if value != settings.BALLEAN_SCENARIO_VERSION:
            raise serializers.ValidationError(
                f'Unsupported scenario version {value}; expected {settings.BALLEAN_SCENARIO_VERSION}.'
            )
        return value

    def validate(self, data):
        task = data['task']['name']
        kind = data['window']['kind']
        if task == TASK_DERIVE_INTERVAL_BASE and data.get('bornology', {}).get('kind') != BORNOLOGY_CHAIN:
            raise serializers.ValidationError({'bornology': 'derive-interval-base needs a chain bornology.'})
        if task == TASK_SEARCH and kind == WINDOW_NGON:
            params = data['task'].get('params') or {}
            missing = [name for name in ('delta', 'epsilon') if name not in params]
            if missing:
                raise serializers.ValidationError({'task': f'n-gon search needs {", ".join(missing)}.'})
        return data
