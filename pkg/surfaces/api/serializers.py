from rest_framework import serializers

from app.documents import VersionedDocumentSerializer
from app.exceptions import KodairaKitError
from surfaces.exceptions import (
    KodairaDimensionMismatch,
    MissingExceptionalCurve,
    NoetherViolation,
    NonAlgebraicPositivity,
)
from surfaces.invariants import BundleInvariants
from surfaces.services import make_surface


class SurfaceModelSerializer(VersionedDocumentSerializer):
    """Surface document: the constructor fields; chi_O is emitted and ignored on read."""
    k_squared = serializers.IntegerField()
    c2 = serializers.IntegerField()
    chi_O = serializers.IntegerField(read_only=True)
    picard_rank = serializers.IntegerField(min_value=0)
    alg_dim = serializers.ChoiceField(choices=[0, 1, 2])
    kodaira_dim = serializers.ChoiceField(choices=[-1, 0, 1, 2])
    minimal = serializers.BooleanField()
    kaehler = serializers.BooleanField()

    def validate(self, attrs):
        attrs.pop('schema', None)
        try:
            make_surface(**attrs)
        except NoetherViolation as exc:
            raise serializers.ValidationError({'k_squared': [str(exc)]})
        except NonAlgebraicPositivity as exc:
            raise serializers.ValidationError({'k_squared': [str(exc)]})
        except KodairaDimensionMismatch as exc:
            raise serializers.ValidationError({'kodaira_dim': [str(exc)]})
        except MissingExceptionalCurve as exc:
            raise serializers.ValidationError({'minimal': [str(exc)]})
        except KodairaKitError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs

    def create(self, validated_data):
        return make_surface(**validated_data)


class BundleInvariantsSerializer(VersionedDocumentSerializer):
    rank = serializers.IntegerField(min_value=1)
    c1_sq = serializers.IntegerField()
    c1_dot_K = serializers.IntegerField()
    c2 = serializers.IntegerField()

    def validate(self, attrs):
        attrs.pop('schema', None)
        return attrs

    def create(self, validated_data):
        return BundleInvariants(**validated_data)
