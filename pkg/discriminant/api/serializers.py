from dataclasses import dataclass
from typing import List

from rest_framework import serializers

from app.documents import VersionedDocumentSerializer
from curves.api.serializers import CurveConfigurationSerializer, configuration_from_data
from curves.configuration import CurveConfiguration, ReducedDivisor
from surfaces.api.serializers import SurfaceModelSerializer
from surfaces.invariants import SurfaceModel
from surfaces.services import make_surface


@dataclass(frozen=True)
class ChainInput:
    surface: SurfaceModel
    config: CurveConfiguration
    divisor: ReducedDivisor
    contractions: List[str]


class ChainSerializer(VersionedDocumentSerializer):
    """
    Chain document: the top surface, its configuration, the divisor (all curves
    when omitted) and the (-1)-curves to contract, in order.
    """
    surface = SurfaceModelSerializer()
    config = CurveConfigurationSerializer()
    divisor = serializers.ListField(child=serializers.CharField(max_length=64), required=False, allow_null=True,
                                    default=None)
    contractions = serializers.ListField(child=serializers.CharField(max_length=64), required=False, default=list)

    def validate(self, attrs):
        known = {node['id'] for node in attrs['config']['nodes']}
        errors = {}
        unknown = [c for c in attrs.get('divisor') or [] if c not in known]
        if unknown:
            errors['divisor'] = [f"Unknown curves: {', '.join(unknown)}"]
        if len(set(attrs.get('contractions', []))) != len(attrs.get('contractions', [])):
            errors['contractions'] = ['A curve is contracted only once']
        if errors:
            raise serializers.ValidationError(errors)
        return attrs

    def create(self, validated_data):
        config = configuration_from_data(validated_data['config'])
        names = validated_data.get('divisor')
        divisor = config.full_divisor() if names is None else ReducedDivisor.of(names)
        return ChainInput(
            surface=make_surface(**validated_data['surface']),
            config=config,
            divisor=divisor,
            contractions=list(validated_data.get('contractions', [])),
        )
