from rest_framework import serializers

from app.documents import VersionedDocumentSerializer
from curves.configuration import (
    GENUS_NOTES,
    CurveConfiguration,
    CurveNode,
    Incidence,
    LocalType,
    MarkedPoint,
    pair,
)
from curves.exceptions import UnsupportedLocalType


class CurveNodeSerializer(serializers.Serializer):
    id = serializers.CharField(max_length=64)
    self_int = serializers.IntegerField()
    rational_smooth = serializers.BooleanField(default=True)
    genus_note = serializers.ChoiceField(choices=GENUS_NOTES, allow_null=True, required=False, default=None)
    genus = serializers.IntegerField(min_value=0, allow_null=True, required=False, default=None)


class IncidenceSerializer(serializers.Serializer):
    curve = serializers.CharField(max_length=64)
    multiplicity = serializers.IntegerField(min_value=1, default=1)


class MarkedPointSerializer(serializers.Serializer):
    id = serializers.CharField(max_length=64)
    local_type = serializers.CharField(default=LocalType.ORDINARY.value)
    incidences = IncidenceSerializer(many=True)

    def validate_local_type(self, value):
        try:
            return LocalType.parse(value)
        except UnsupportedLocalType as exc:
            raise serializers.ValidationError(str(exc))


class PairwiseEntrySerializer(serializers.Serializer):
    curves = serializers.ListField(child=serializers.CharField(max_length=64), min_length=2, max_length=2)
    intersection = serializers.IntegerField()
    unmarked = serializers.IntegerField(min_value=0, default=0)


class CurveConfigurationSerializer(VersionedDocumentSerializer):
    """
    Configuration document. Pairwise entries may be given in one order only;
    the reverse order is filled in unless it is listed explicitly.
    """
    nodes = CurveNodeSerializer(many=True)
    points = MarkedPointSerializer(many=True, required=False, default=list)
    pairwise = PairwiseEntrySerializer(many=True, required=False, default=list)

    def create(self, validated_data):
        return configuration_from_data(validated_data)


def configuration_from_data(data) -> CurveConfiguration:
    nodes = tuple(CurveNode(**node) for node in data['nodes'])
    points = tuple(
        MarkedPoint(
            id=point['id'],
            incidences=tuple(Incidence(**inc) for inc in point['incidences']),
            local_type=LocalType.parse(point['local_type']),
        )
        for point in data.get('points', [])
    )
    pairwise = {}
    unmarked = {}
    entries = data.get('pairwise', [])
    for entry in entries:
        a, b = entry['curves']
        pairwise[(a, b)] = entry['intersection']
        if entry['unmarked']:
            unmarked[pair(a, b)] = entry['unmarked']
    for entry in entries:
        a, b = entry['curves']
        pairwise.setdefault((b, a), entry['intersection'])
    return CurveConfiguration(nodes=nodes, pairwise=pairwise, points=points, unmarked=unmarked)


def configuration_document(cfg: CurveConfiguration) -> dict:
    """Document form of a configuration: each unordered pair listed once, ids sorted."""
    pairs = sorted({tuple(sorted((a, b))) for (a, b) in cfg.pairwise if a != b})
    return {
        'nodes': [
            {
                'id': node.id,
                'self_int': node.self_int,
                'rational_smooth': node.rational_smooth,
                'genus_note': node.genus_note,
                'genus': node.genus,
            }
            for node in cfg.nodes
        ],
        'points': [
            {
                'id': point.id,
                'local_type': point.local_type.value,
                'incidences': [
                    {'curve': inc.curve, 'multiplicity': inc.multiplicity} for inc in point.incidences
                ],
            }
            for point in cfg.points
        ],
        'pairwise': [
            {
                'curves': [a, b],
                'intersection': cfg.intersection(a, b),
                'unmarked': cfg.unmarked_count(a, b),
            }
            for a, b in pairs
        ],
    }
