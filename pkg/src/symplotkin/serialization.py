from typing import Any

from marshmallow import EXCLUDE, Schema, fields, post_load, validate

from .errors import ProblemDetails
from .models import (
    PROVENANCES,
    CodeFlags,
    CodeReport,
    DistanceClaim,
    LcdSearchReport,
    SearchConfig,
    Table1Outcome,
    Table1Report,
    Table1Row,
)


class ProblemDetailsSchema(Schema):
    error_code = fields.Str()
    title = fields.Str()
    detail = fields.Str(allow_none=True)
    errors = fields.Dict(
        fields.Str(),
        fields.List(fields.Str()),
        allow_none=True,
    )

    @post_load
    def make(self, data: Any, **kwargs: Any) -> ProblemDetails:
        return ProblemDetails(**data)

    class Meta:
        unknown = EXCLUDE


class SearchConfigSchema(Schema):
    trials = fields.Int()
    seed = fields.Int()
    report_every = fields.Int(data_key="reportEvery")

    @post_load
    def make(self, data: Any, **kwargs: Any) -> SearchConfig:
        return SearchConfig(**data)

    class Meta:
        unknown = EXCLUDE


class DistanceClaimSchema(Schema):
    value = fields.Int(required=True)
    provenance = fields.Str(
        required=True, validate=validate.OneOf(PROVENANCES)
    )
    detail = fields.Str(allow_none=True)
    certificate = fields.List(fields.Int(), allow_none=True)

    @post_load
    def make(self, data: Any, **kwargs: Any) -> DistanceClaim:
        return DistanceClaim(**data)

    class Meta:
        unknown = EXCLUDE


class CodeFlagsSchema(Schema):
    so = fields.Bool(allow_none=True)
    dc = fields.Bool(allow_none=True)
    selfdual = fields.Bool(data_key="selfDual", allow_none=True)
    lcd = fields.Bool(allow_none=True)
    hamming_mds = fields.Bool(data_key="hammingMds", allow_none=True)
    symplectic_mds = fields.Bool(data_key="symplecticMds", allow_none=True)

    @post_load
    def make(self, data: Any, **kwargs: Any) -> CodeFlags:
        return CodeFlags(**data)

    class Meta:
        unknown = EXCLUDE


class CodeReportSchema(Schema):
    schema = fields.Int()
    name = fields.Str(required=True)
    params = fields.Dict(fields.Str(), fields.Int())
    field_header = fields.Str(data_key="field", required=True)
    n = fields.Int(required=True)
    k = fields.Int(required=True)
    flags = fields.Nested(CodeFlagsSchema())
    d_hamming = fields.Nested(
        DistanceClaimSchema(), data_key="dHamming", allow_none=True
    )
    d_symplectic = fields.Nested(
        DistanceClaimSchema(), data_key="dSymplectic", allow_none=True
    )
    hamming_defect = fields.Int(data_key="hammingDefect", allow_none=True)
    symplectic_defect = fields.Int(
        data_key="symplecticDefect", allow_none=True
    )
    predicted = fields.Int(allow_none=True)
    seed = fields.Int()
    budget = fields.Int()
    w_max = fields.Int(data_key="wMax", allow_none=True)
    failures = fields.List(fields.Str())
    passed = fields.Bool(dump_only=True)

    @post_load
    def make(self, data: Any, **kwargs: Any) -> CodeReport:
        return CodeReport(**data)

    class Meta:
        unknown = EXCLUDE


class Table1RowSchema(Schema):
    kind = fields.Str(validate=validate.OneOf(("so", "dc")))
    q = fields.Int()
    m = fields.Int()
    r = fields.Int()
    i = fields.Int()
    n = fields.Int()
    k = fields.Int()
    d = fields.Int()
    bound = fields.Int()

    @post_load
    def make(self, data: Any, **kwargs: Any) -> Table1Row:
        return Table1Row(**data)

    class Meta:
        unknown = EXCLUDE


class Table1OutcomeSchema(Schema):
    row = fields.Nested(Table1RowSchema(), required=True)
    passed = fields.Bool(required=True)
    report = fields.Nested(CodeReportSchema(), allow_none=True)
    reason = fields.Str(allow_none=True)

    @post_load
    def make(self, data: Any, **kwargs: Any) -> Table1Outcome:
        return Table1Outcome(**data)

    class Meta:
        unknown = EXCLUDE


class Table1ReportSchema(Schema):
    schema = fields.Int()
    budget = fields.Int()
    outcomes = fields.List(fields.Nested(Table1OutcomeSchema()))
    passed = fields.Int(dump_only=True)
    all_passed = fields.Bool(data_key="allPassed", dump_only=True)

    @post_load
    def make(self, data: Any, **kwargs: Any) -> Table1Report:
        return Table1Report(**data)

    class Meta:
        unknown = EXCLUDE


class LcdSearchReportSchema(Schema):
    schema = fields.Int()
    name = fields.Str(required=True)
    n = fields.Int()
    k = fields.Int()
    q = fields.Int()
    seed = fields.Int()
    trials = fields.Int()
    permutation = fields.Str(allow_none=True)
    codes = fields.List(fields.Nested(CodeReportSchema()))
    found = fields.Bool(dump_only=True)

    @post_load
    def make(self, data: Any, **kwargs: Any) -> LcdSearchReport:
        return LcdSearchReport(**data)

    class Meta:
        unknown = EXCLUDE
