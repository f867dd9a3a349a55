from rest_framework import serializers

from .conf import setting
from .exceptions import ToricError
from .homotopy import (
    Contractible,
    DiskSphere,
    ExternalX,
    Fibre,
    FibreKind,
    FibreType,
    FormalSpace,
    GeneralPair,
    LoopOf,
    PairSpec,
    Sphere,
    Suspension,
)
from .ranks import RankSeries, growth_report
from .simplicial import SimplicialComplex, from_facets


def faces_payload(faces) -> list[list[int]]:
    return [list(face.vertices) for face in faces]


class ComplexSerializer(serializers.Serializer):
    """Complex JSON: ``{"m": 4, "facets": [[1, 2], [2, 3, 4]]}``."""

    m = serializers.IntegerField(min_value=1)
    facets = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=1)))

    def validate(self, attrs):
        try:
            attrs["complex"] = from_facets(attrs["m"], attrs["facets"])
        except ToricError as exc:
            raise serializers.ValidationError(str(exc)) from exc
        return attrs

    def to_representation(self, instance: SimplicialComplex):
        return {"m": instance.m, "facets": faces_payload(instance.facets)}


class FibreField(serializers.Field):
    """``"trivial"``, ``{"sphere": d}`` or ``{"big": r}``."""

    default_error_messages = {
        "invalid": 'expected "trivial", {"sphere": d} or {"big": r}',
    }

    def to_internal_value(self, data):
        if data == "trivial" or data == {"trivial": True}:
            return FibreType.trivial()
        if not isinstance(data, dict) or len(data) != 1:
            self.fail("invalid")
        (kind, value), = data.items()
        if kind not in ("sphere", "big") or not isinstance(value, int) or isinstance(value, bool):
            self.fail("invalid")
        try:
            return FibreType.sphere(value) if kind == "sphere" else FibreType.big(value)
        except ToricError as exc:
            raise serializers.ValidationError(str(exc)) from exc

    def to_representation(self, value: FibreType):
        if value.kind is FibreKind.TRIVIAL:
            return "trivial"
        if value.kind is FibreKind.SPHERE:
            return {"sphere": value.dim}
        return {"big": value.lower_rank_bound}


class GeneralPairSerializer(serializers.Serializer):
    x_elliptic = serializers.BooleanField()
    x_rational_degrees = serializers.ListField(
        child=serializers.IntegerField(min_value=2), required=False, allow_null=True, default=None
    )
    y_rational = FibreField()


class PairEntrySerializer(serializers.Serializer):
    disk_sphere = serializers.IntegerField(min_value=2, required=False)
    general = GeneralPairSerializer(required=False)

    def validate(self, attrs):
        if ("disk_sphere" in attrs) == ("general" in attrs):
            raise serializers.ValidationError('give exactly one of "disk_sphere" and "general"')
        if "disk_sphere" in attrs:
            attrs["pair"] = DiskSphere(attrs["disk_sphere"])
            return attrs
        general = attrs["general"]
        degrees = general.get("x_rational_degrees")
        try:
            attrs["pair"] = GeneralPair(
                x_elliptic=general["x_elliptic"],
                y_rational=general["y_rational"],
                x_rational_degrees=tuple(degrees) if degrees is not None else None,
            )
        except ToricError as exc:
            raise serializers.ValidationError(str(exc)) from exc
        return attrs


class PairsFileSerializer(serializers.Serializer):
    """``{"pairs": [...]}``; a lone disk-sphere entry applies to every vertex."""

    pairs = PairEntrySerializer(many=True, allow_empty=False)

    def validate(self, attrs):
        entries = [entry["pair"] for entry in attrs["pairs"]]
        m = self.context.get("m")
        if len(entries) == 1 and isinstance(entries[0], DiskSphere) and m is not None:
            entries = entries * m
        elif m is not None and len(entries) != m:
            raise serializers.ValidationError(f"{len(entries)} pairs given for a complex on {m} vertices")
        attrs["spec"] = PairSpec(tuple(entries))
        return attrs


class FormalSpaceField(serializers.Field):
    """Nested tag tree, e.g. ``{"tag": "loop", "child": {"tag": "sphere", "dim": 7}}``."""

    def to_representation(self, value: FormalSpace):
        node = {"tag": value.tag}
        if isinstance(value, Sphere):
            node["dim"] = value.dim
        elif isinstance(value, (ExternalX, Fibre)):
            node["vertex"] = value.vertex
        elif isinstance(value, LoopOf):
            node["child"] = self.to_representation(value.child)
        elif isinstance(value, Suspension):
            node["times"] = value.times
            node["child"] = self.to_representation(value.child)
        elif not isinstance(value, Contractible):
            node["children"] = [self.to_representation(child) for child in value.children]
        return node


class MmfSetSerializer(serializers.Serializer):
    mmf = serializers.SerializerMethodField()
    mutually_disjoint = serializers.BooleanField(source="disjoint")

    def get_mmf(self, obj):
        return faces_payload(obj.faces)


class ConditionSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    evidence = serializers.CharField()
    vertices = serializers.ListField(child=serializers.IntegerField())
    faces = serializers.SerializerMethodField()

    def get_faces(self, obj):
        return faces_payload(obj.faces)


class WitnessSerializer(serializers.Serializer):
    sigma1 = serializers.SerializerMethodField()
    sigma2 = serializers.SerializerMethodField()
    support = serializers.SerializerMethodField()
    wedge = FormalSpaceField()
    wedge_text = serializers.CharField(source="wedge")
    intermediary = ComplexSerializer()

    def get_sigma1(self, obj):
        return list(obj.sigma1.vertices)

    def get_sigma2(self, obj):
        return list(obj.sigma2.vertices)

    def get_support(self, obj):
        return list(obj.support.vertices)


class RankSeriesSerializer(serializers.Serializer):
    ranks = serializers.SerializerMethodField()
    exact_finite = serializers.BooleanField()
    max_degree = serializers.IntegerField()
    cumulative = serializers.SerializerMethodField()
    growth = serializers.SerializerMethodField()
    ratio_tail = serializers.SerializerMethodField()

    def _growth(self, obj: RankSeries):
        if obj.max_degree < setting("GROWTH_MIN_DEGREE"):
            return None
        return growth_report(obj)

    def get_ranks(self, obj):
        return {str(q): r for q, r in obj.ranks.items()}

    def get_cumulative(self, obj):
        return obj.cumulative()

    def get_growth(self, obj):
        if obj.exact_finite:
            return "polynomial"
        report = self._growth(obj)
        return report.verdict.value if report and report.verdict else None

    def get_ratio_tail(self, obj):
        report = self._growth(obj)
        return str(report.ratio_tail) if report else None


class ClassificationSerializer(serializers.Serializer):
    verdict = serializers.CharField(source="verdict.value")
    conditions = serializers.SerializerMethodField()
    mmf = MmfSetSerializer()
    decomposition = FormalSpaceField(allow_null=True)
    decomposition_text = serializers.SerializerMethodField()
    witness = WitnessSerializer(allow_null=True)
    moore_note = serializers.CharField(allow_null=True)
    warnings = serializers.ListField(child=serializers.CharField())

    def get_conditions(self, obj):
        return {
            "i": ConditionSerializer(obj.elliptic_factors).data,
            "ii": ConditionSerializer(obj.disjoint_faces).data,
            "iii": ConditionSerializer(obj.sphere_fibres).data,
        }

    def get_decomposition_text(self, obj):
        return str(obj.decomposition) if obj.decomposition is not None else None


class CounterexampleSerializer(serializers.Serializer):
    index = serializers.IntegerField()
    detail = serializers.CharField()
    instance = serializers.JSONField()


class PropertyOutcomeSerializer(serializers.Serializer):
    name = serializers.CharField()
    module = serializers.CharField()
    instances = serializers.IntegerField()
    failed = serializers.IntegerField()
    passed = serializers.BooleanField()
    failures = CounterexampleSerializer(many=True)
    seconds = serializers.FloatField(required=False)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if not self.context.get("timings"):
            data.pop("seconds", None)
        return data


class ReportSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    iterations = serializers.IntegerField()
    max_m = serializers.IntegerField()
    passed = serializers.BooleanField()
    properties = PropertyOutcomeSerializer(many=True)
