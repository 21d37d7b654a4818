from rest_framework import serializers

SIGNIFICANT_DIGITS = 12


def round_significant(value: float) -> float:
    """Round to the 12 significant digits every output format prints."""
    return float(f"{float(value):.{SIGNIFICANT_DIGITS}g}")


class SignificantFloatField(serializers.FloatField):
    def to_representation(self, value):
        return round_significant(value)


class FractionField(serializers.Field):
    """Exact rational rendered as "p/q"."""

    def to_representation(self, value):
        return f"{value.numerator}/{value.denominator}"


class ResultSerializer(serializers.Serializer):
    """Serializer for one named numeric result."""
    name = serializers.CharField()
    value = SignificantFloatField()
    provenance = serializers.CharField(source='provenance.value')
    exact = FractionField(read_only=True)


class RunReportSerializer(serializers.Serializer):
    """Serializer for a command's RunReport, keys in a fixed order."""
    command = serializers.CharField()
    parameters = serializers.DictField()
    results = ResultSerializer(many=True)
    passed = serializers.BooleanField()
    tolerance = SignificantFloatField()
    notes = serializers.ListField(child=serializers.CharField())

    def to_representation(self, instance):
        data = super().to_representation(instance)
        return {
            'command': data['command'],
            'parameters': data['parameters'],
            'results': data['results'],
            'pass': data['passed'],
            'tolerance': data['tolerance'],
            'notes': data['notes'],
        }
