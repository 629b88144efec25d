import json

import pytest
from marshmallow import ValidationError

from symplotkin.errors import BudgetExceededError, ProblemDetails
from symplotkin.models import CodeReport, DistanceClaim, LcdSearchReport
from symplotkin.serialization import (
    CodeReportSchema,
    DistanceClaimSchema,
    LcdSearchReportSchema,
    ProblemDetailsSchema,
    SearchConfigSchema,
    Table1ReportSchema,
)
from tests.data_factory import (
    build_code_report,
    build_distance_claim,
    build_problem_details,
    build_search_config,
    build_table1_report,
)


def test_dump_problem_details() -> None:
    dumped = ProblemDetailsSchema().dump(build_problem_details())
    assert dumped == {
        "error_code": "budget_exceeded",
        "title": "Exhaustive enumeration exceeds the budget",
        "detail": "1398101 projective classes exceed budget 1024",
        "errors": {},
    }


def test_load_problem_details_from_error() -> None:
    error = BudgetExceededError("too many classes")
    text = ProblemDetailsSchema().dumps(error.problem_details)
    loaded = ProblemDetailsSchema().loads(text)
    assert isinstance(loaded, ProblemDetails)
    assert loaded.error_code == "budget_exceeded"
    assert loaded.detail == "too many classes"


def test_search_config_uses_camel_case() -> None:
    dumped = SearchConfigSchema().dump(build_search_config())
    assert dumped == {"trials": 10_000, "seed": 1, "reportEvery": 1_000}
    assert SearchConfigSchema().load(dumped) == build_search_config()


def test_distance_claim() -> None:
    dumped = DistanceClaimSchema().dump(build_distance_claim())
    assert dumped["provenance"] == "exhaustive"
    assert dumped["certificate"] == [0, 1, 1, 0, 0, 1, 1, 0]
    loaded = DistanceClaimSchema().load(dumped)
    assert isinstance(loaded, DistanceClaim)
    assert loaded == build_distance_claim()


def test_distance_claim_rejects_unknown_provenance() -> None:
    with pytest.raises(ValidationError):
        DistanceClaimSchema().load({"value": 3, "provenance": "guessed"})


def test_dump_code_report() -> None:
    dumped = CodeReportSchema().dump(build_code_report())
    assert dumped["field"] == "field p=2 m=2 modulus=1,1,1"
    assert dumped["schema"] == 1
    assert dumped["passed"] is True
    assert dumped["flags"]["selfDual"] is True
    assert dumped["flags"]["symplecticMds"] is True
    assert dumped["flags"]["hammingMds"] is None
    assert dumped["dSymplectic"]["value"] == 4
    assert dumped["dHamming"] is None
    assert dumped["symplecticDefect"] == 0
    assert dumped["wMax"] is None


def test_load_code_report_ignores_unknown_keys() -> None:
    dumped = CodeReportSchema().dump(build_code_report())
    dumped["generatedBy"] = "somebody"
    loaded = CodeReportSchema().load(dumped)
    assert isinstance(loaded, CodeReport)
    assert loaded == build_code_report()


def test_code_report_json_is_stable() -> None:
    text = CodeReportSchema().dumps(build_code_report())
    assert json.loads(text)["params"] == {"m": 2, "q": 4}


def test_dump_table1_report() -> None:
    dumped = Table1ReportSchema().dump(build_table1_report())
    assert dumped["passed"] == 1
    assert dumped["allPassed"] is False
    assert dumped["outcomes"][0]["row"]["kind"] == "so"
    assert dumped["outcomes"][1]["reason"] == "distance 3"
    assert dumped["outcomes"][1]["report"] is None
    loaded = Table1ReportSchema().load(dumped)
    assert loaded == build_table1_report()


def test_dump_lcd_search_report() -> None:
    report = LcdSearchReport(
        "hamming",
        7,
        4,
        2,
        1,
        3,
        "(2 7 1 4 6 3 5)",
        [build_code_report()],
    )
    dumped = LcdSearchReportSchema().dump(report)
    assert dumped["found"] is True
    assert dumped["codes"][0]["name"] == "theorem6"
    assert LcdSearchReportSchema().load(dumped) == report
