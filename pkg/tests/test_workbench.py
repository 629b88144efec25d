import pytest

from symplotkin import WorkbenchBuilder, WorkbenchOptions
from symplotkin.errors import (
    CriterionFailedError,
    InvalidConfigError,
    ParameterOutOfRangeError,
    UnknownFamilyError,
)
from symplotkin.lcdsearch import Permutation, search_lcd_permutation
from symplotkin.models import BOUNDED, EXHAUSTIVE, SearchConfig, Table1Row
from symplotkin.table1 import TABLE1_ROWS
from symplotkin.workbench import Workbench, appendix_permutation
from tests.data_factory import (
    build_code,
    build_extended_hamming_8_4,
    build_gf2,
    build_hamming_7_4,
    build_search_config,
    build_workbench_options,
)


def build_workbench(budget: int = 2**24) -> Workbench:
    return WorkbenchBuilder(build_workbench_options(budget)).build()


def test_builder_defaults() -> None:
    workbench = WorkbenchBuilder().build()
    assert isinstance(workbench, Workbench)


def test_construct_theorem7() -> None:
    so, dc = build_workbench().construct(
        "theorem7", {"q": 3, "m": 2, "r": 1, "i": 1}
    )
    assert (so.name, so.n, so.k) == ("theorem7.so", 18, 6)
    assert (dc.name, dc.n, dc.k) == ("theorem7.dc", 18, 12)
    assert so.flags.so is True
    assert dc.flags.dc is True
    assert so.d_symplectic is not None
    assert so.d_symplectic.value == 6
    assert so.d_symplectic.provenance == EXHAUSTIVE
    assert dc.d_symplectic is not None
    assert dc.d_symplectic.value == 3
    assert so.symplectic_defect == 1
    assert so.passed and dc.passed
    assert so.params == {"q": 3, "m": 2, "r": 1, "i": 1}


def test_construct_theorem6() -> None:
    (report,) = build_workbench().construct("theorem6", {"m": 2})
    assert (report.n, report.k) == (12, 6)
    assert report.flags.selfdual is True
    assert report.flags.symplectic_mds is True
    assert report.d_symplectic is not None
    assert report.d_symplectic.value == 4
    assert report.field_header == "field p=2 m=2 modulus=1,1,1"
    assert report.passed


def test_construct_grm() -> None:
    (report,) = build_workbench().construct("grm", {"q": 2, "r": 1, "m": 3})
    assert (report.n, report.k) == (8, 4)
    assert report.d_hamming is not None
    assert report.d_hamming.value == 4
    assert report.d_hamming.provenance == EXHAUSTIVE
    assert report.hamming_defect == 1
    assert report.flags.hamming_mds is False
    assert report.passed


def test_construct_theorem4_odd_variant() -> None:
    reports = build_workbench().construct(
        "theorem4", {"q": 5, "n": 5, "k": 2, "odd": 1}
    )
    assert [r.k for r in reports] == [5, 5]
    assert all(r.flags.symplectic_mds for r in reports)
    assert all(r.passed for r in reports)


def test_construct_grs_with_hamming_certificate_only() -> None:
    (report,) = build_workbench(budget=10).construct(
        "grs", {"q": 5, "n": 5, "k": 3}
    )
    assert report.d_hamming is not None
    assert report.d_hamming.provenance == "formula"
    assert report.hamming_defect is None
    assert report.failures == ["mds"]


def test_construct_unknown_family() -> None:
    with pytest.raises(UnknownFamilyError) as ex_info:
        build_workbench().construct("reed-solomon", {})
    assert ex_info.value.problem_details.error_code == "unknown_family"


def test_construct_missing_parameter() -> None:
    with pytest.raises(ParameterOutOfRangeError):
        build_workbench().construct("theorem7", {"q": 3})


def test_check_imported_code() -> None:
    C = build_code(build_gf2(), [[1, 1, 0, 0], [0, 0, 1, 1]])
    workbench = build_workbench()
    report = workbench.check(C, ["so", "selfdual", "distance"])
    assert report.name == "import"
    assert report.passed
    failing = workbench.check(C, ["lcd", "so"])
    assert failing.failures == ["lcd"]


def test_check_rejects_unknown_check() -> None:
    with pytest.raises(InvalidConfigError):
        build_workbench().check(build_hamming_7_4(), ["orthogonal"])


def test_check_odd_length_has_no_symplectic_flags() -> None:
    report = build_workbench().check(build_hamming_7_4(), [])
    assert report.flags.so is None
    assert report.d_symplectic is None
    assert report.d_hamming is not None
    assert report.d_hamming.value == 3


def test_certify_flags_prediction_mismatch() -> None:
    C = build_code(build_gf2(), [[1, 1, 0, 0], [0, 0, 1, 1]])
    report = build_workbench().certify(C, "paired", predicted=3)
    assert report.failures == ["predicted-distance"]


def test_certify_bounded_search_finds_lighter_word() -> None:
    C = build_hamming_7_4()
    workbench = WorkbenchBuilder(WorkbenchOptions(budget=1)).build()
    doubled = build_code(
        build_gf2(),
        [list(row) + list(row) for row in C.generator.tolist()],
    )
    report = workbench.certify(doubled, "doubled", predicted=4, hamming=False)
    assert report.d_symplectic is not None
    assert report.d_symplectic.value == 3
    assert report.d_symplectic.provenance == BOUNDED
    assert report.failures == ["predicted-distance"]


def test_table1_small_rows() -> None:
    rows = [TABLE1_ROWS[0], TABLE1_ROWS[2], TABLE1_ROWS[15]]
    report = build_workbench().table1(rows)
    assert [o.passed for o in report.outcomes] == [True, True, True]
    assert report.all_passed
    assert report.budget == 2**24


def test_table1_dc_row_by_bounded_search() -> None:
    row = TABLE1_ROWS[12]
    assert (row.n, row.k, row.d) == (54, 46, 3)
    (outcome,) = build_workbench().table1([row]).outcomes
    assert outcome.passed
    assert outcome.report is not None
    assert outcome.report.d_symplectic is not None
    assert outcome.report.d_symplectic.provenance == BOUNDED


def test_table1_reports_failures() -> None:
    wrong = Table1Row("so", 2, 2, 0, 1, 8, 4, 3, 3)
    invalid = Table1Row("so", 3, 2, 3, 1, 18, 9, 3, 5)
    report = build_workbench().table1([wrong, invalid])
    assert report.passed == 0
    assert report.outcomes[0].reason == "distance 2"
    assert report.outcomes[1].report is None
    assert "exceeds" in str(report.outcomes[1].reason)


def test_lcd_search_on_hamming_code() -> None:
    report = build_workbench().lcd_search(
        build_hamming_7_4(), build_search_config(), "hamming"
    )
    assert report.found
    assert report.name == "hamming"
    assert (report.n, report.k, report.q) == (7, 4, 2)
    lcd, dual = report.codes
    assert (lcd.name, lcd.n, lcd.k) == ("theorem9.lcd", 14, 8)
    assert (dual.name, dual.n, dual.k) == ("theorem9.dual", 14, 6)
    assert lcd.flags.lcd and dual.flags.lcd
    assert lcd.d_symplectic is not None and dual.d_symplectic is not None
    assert (lcd.d_symplectic.value, dual.d_symplectic.value) == (3, 4)
    assert lcd.passed and dual.passed


def test_lcd_search_without_result() -> None:
    report = build_workbench().lcd_search(
        build_extended_hamming_8_4(),
        SearchConfig(trials=50, seed=3, report_every=0),
    )
    assert not report.found
    assert report.trials == 50
    assert report.codes == []


def test_verify_theorem9_import_with_claimed_distance() -> None:
    C = build_hamming_7_4()
    outcome = search_lcd_permutation(C, build_search_config())
    assert outcome.permutation is not None
    lcd, dual = build_workbench(budget=10).verify_theorem9_import(
        C, outcome.permutation, claimed=3
    )
    assert lcd.predicted == 3
    assert lcd.d_symplectic is not None
    assert lcd.d_symplectic.provenance == BOUNDED
    assert lcd.d_symplectic.value == 3
    assert dual.d_symplectic is not None
    assert dual.d_symplectic.value == 4
    assert lcd.passed and dual.passed


def test_verify_theorem9_import_rejects_identity() -> None:
    with pytest.raises(CriterionFailedError):
        build_workbench().verify_theorem9_import(
            build_hamming_7_4(), Permutation.identity(7)
        )


def test_appendix_permutation() -> None:
    assert appendix_permutation("P46").n == 46
    assert appendix_permutation("p65") == appendix_permutation("P63")
    with pytest.raises(InvalidConfigError):
        appendix_permutation("P99")
