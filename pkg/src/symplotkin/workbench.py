import logging
from abc import ABC, abstractmethod
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from .appendix import APPENDIX_PERMUTATIONS
from .code import (
    LinearCode,
    dual_euclidean,
    min_hamming_distance,
    projective_count,
)
from .config import WorkbenchOptions
from .errors import (
    InvalidConfigError,
    ParameterOutOfRangeError,
    UnknownFamilyError,
    WorkbenchError,
)
from .families import (
    Construction,
    GrmSpec,
    corollary_selfdual,
    grm_code,
    grm_distance,
    grm_min_weight_codeword,
    grs_code,
    grs_spec,
    hyperoval_code,
    plotkin_grm,
    theorem3_codes,
    theorem4_mds_codes,
    theorem6_selfdual,
    theorem7_codes,
)
from .lcdsearch import (
    Permutation,
    build_theorem9_codes,
    search_lcd_permutation,
)
from .matgf import as_ints
from .models import (
    BOUNDED,
    CERTIFICATE,
    EXHAUSTIVE,
    FORMULA,
    CodeFlags,
    CodeReport,
    DistanceClaim,
    LcdSearchReport,
    SearchConfig,
    Table1Outcome,
    Table1Report,
    Table1Row,
)
from .plotkin import plotkin_word
from .symplectic import (
    bounded_symplectic_weight_search,
    is_symplectic_dc,
    is_symplectic_lcd,
    is_symplectic_selfdual,
    is_symplectic_so,
    min_symplectic_distance,
    symplectic_singleton_defect,
    symplectic_weight,
)
from .table1 import TABLE1_ROWS, build_row, judge_row

CHECKS = (
    "so",
    "dc",
    "selfdual",
    "lcd",
    "mds",
    "symplectic-mds",
    "distance",
)

HAMMING = "hamming"
SYMPLECTIC = "symplectic"

# A built code, the metric its predicted distance refers to and the
# checks its construction promises.
Plan = Tuple[Construction, str, Tuple[str, ...]]


class Workbench(ABC):
    """Builds, certifies and compares symplectic codes.

    Create new instance of the workbench with `WorkbenchBuilder`.
    """

    @abstractmethod
    def construct(
        self, family: str, params: Dict[str, int]
    ) -> List[CodeReport]:
        """Builds the codes of a named family and certifies each.

        :param family: One of `FAMILIES`.
        :param params: Integer parameters of the family, for example
            `{"q": 3, "m": 2, "r": 1, "i": 1}` for `theorem7`.
        :return: One report per built code; the theorem builders
            return the SO code first and the DC code second.
        :raises UnknownFamilyError: If the family is not known.
        :raises WorkbenchError: If the builder rejects the parameters.
        """
        pass

    @abstractmethod
    def certify(
        self,
        code: LinearCode,
        name: str,
        params: Optional[Dict[str, int]] = None,
        predicted: Optional[int] = None,
        certificate: Optional[galois.FieldArray] = None,
        checks: Sequence[str] = (),
        hamming: bool = True,
        hamming_predicted: Optional[int] = None,
        hamming_certificate: Optional[galois.FieldArray] = None,
    ) -> CodeReport:
        """Establishes the distances and structural flags of a code.

        A distance is exhaustive when the projective enumeration fits
        the budget. Otherwise a predicted symplectic distance d is
        verified by a bounded search that proves no word of weight
        below d together with a codeword of weight d, either the given
        certificate or one found by extending the search to d.

        :param code: The code to certify.
        :param name: Name recorded in the report.
        :param params: Construction parameters recorded in the report.
        :param predicted: Symplectic distance the construction claims.
        :param certificate: A codeword of symplectic weight `predicted`.
        :param checks: Names from `CHECKS` that must hold.
        :param hamming: Whether to establish the Hamming distance.
        :param hamming_predicted: Hamming distance the construction
            claims.
        :param hamming_certificate: A codeword of Hamming weight
            `hamming_predicted`.
        :return: The report; `failures` names every check that did not
            hold and every verified distance that differs from its
            prediction.
        :raises InvalidConfigError: If a check name is unknown.
        """
        pass

    @abstractmethod
    def check(self, code: LinearCode, checks: Sequence[str]) -> CodeReport:
        """Certifies an imported code against the requested checks.

        :param code: The imported code.
        :param checks: Names from `CHECKS`.
        :return: The report.
        :raises InvalidConfigError: If a check name is unknown.
        """
        pass

    @abstractmethod
    def table1(
        self, rows: Optional[Sequence[Table1Row]] = None
    ) -> Table1Report:
        """Rebuilds and certifies the published SO and DC codes from
        pairs of generalized Reed-Muller codes.

        :param rows: Rows to run, all of them when `None`.
        :return: One outcome per row; failures are reported, not raised.
        """
        pass

    @abstractmethod
    def lcd_search(
        self, code: LinearCode, config: SearchConfig, name: str = "import"
    ) -> LcdSearchReport:
        """Searches a permutation P with PP(C, C P) symplectic LCD and
        certifies the two resulting codes.

        :param code: The code C, with k >= 1.
        :param config: Trial budget, seed and progress cadence.
        :param name: Name recorded in the report.
        :return: The report; `permutation` is `None` when no trial
            passed.
        """
        pass

    @abstractmethod
    def verify_theorem9_import(
        self,
        code: LinearCode,
        permutation: Permutation,
        claimed: Optional[int] = None,
    ) -> List[CodeReport]:
        """Applies a stored permutation to an imported code and
        certifies PP(C, C P) and its symplectic dual.

        :param code: The imported code C.
        :param permutation: A permutation on C's length.
        :param claimed: Hamming distance of C when it is too large to
            enumerate; it becomes the predicted symplectic distance of
            PP(C, C P).
        :return: Reports of the LCD code and of its dual.
        :raises SizeMismatchError: If the permutation does not act on
            n points.
        :raises CriterionFailedError: If C meets (C P)^perp_E.
        """
        pass


def _param(params: Dict[str, int], name: str) -> int:
    try:
        return int(params[name])
    except KeyError:
        raise ParameterOutOfRangeError(f"missing parameter {name}")


def _ints(word: Optional[galois.FieldArray]) -> Optional[List[int]]:
    if word is None:
        return None
    return [int(v) for v in as_ints(word)]


def _hamming_weight(word: galois.FieldArray) -> int:
    return int(np.count_nonzero(as_ints(word)))


def _pair(built: Tuple[Construction, Construction]) -> List[Plan]:
    so, dc = built
    return [(so, SYMPLECTIC, ("so",)), (dc, SYMPLECTIC, ("dc",))]


def _grs(params: Dict[str, int]) -> List[Plan]:
    q, n, k = _param(params, "q"), _param(params, "n"), _param(params, "k")
    built = Construction("grs", grs_code(grs_spec(q, n, k)), n - k + 1)
    built.params = {"q": q, "n": n, "k": k}
    return [(built, HAMMING, ("mds",))]


def _grm(params: Dict[str, int]) -> List[Plan]:
    q, r, m = _param(params, "q"), _param(params, "r"), _param(params, "m")
    built = Construction(
        "grm",
        grm_code(GrmSpec(q, r, m)),
        grm_distance(q, r, m),
        grm_min_weight_codeword(q, r, m),
        {"q": q, "r": r, "m": m},
    )
    return [(built, HAMMING, ())]


def _hyperoval(params: Dict[str, int]) -> List[Plan]:
    m = _param(params, "m")
    code = hyperoval_code(m)
    built = Construction("hyperoval", code, code.q, None, {"m": m})
    return [(built, HAMMING, ("mds",))]


def _plotkin(params: Dict[str, int]) -> List[Plan]:
    built = plotkin_grm(
        _param(params, "q"),
        _param(params, "m"),
        _param(params, "r1"),
        _param(params, "r2"),
    )
    return [(built, SYMPLECTIC, ())]


def _theorem3(params: Dict[str, int]) -> List[Plan]:
    return _pair(
        theorem3_codes(
            _param(params, "q"),
            _param(params, "n"),
            _param(params, "k1"),
            _param(params, "k2"),
        )
    )


def _theorem4(params: Dict[str, int]) -> List[Plan]:
    variant = "odd" if params.get("odd", 0) else "even"
    plans = _pair(
        theorem4_mds_codes(
            _param(params, "q"),
            _param(params, "n"),
            _param(params, "k"),
            variant,
        )
    )
    return [
        (built, metric, checks + ("symplectic-mds",))
        for built, metric, checks in plans
    ]


def _theorem6(params: Dict[str, int]) -> List[Plan]:
    built = theorem6_selfdual(_param(params, "m"))
    return [(built, SYMPLECTIC, ("selfdual",))]


def _theorem7(params: Dict[str, int]) -> List[Plan]:
    return _pair(
        theorem7_codes(
            _param(params, "q"),
            _param(params, "m"),
            _param(params, "r"),
            _param(params, "i"),
        )
    )


def _corollary(params: Dict[str, int]) -> List[Plan]:
    built = corollary_selfdual(_param(params, "q"), _param(params, "n"))
    return [(built, SYMPLECTIC, ("selfdual", "symplectic-mds"))]


FAMILIES: Dict[str, Callable[[Dict[str, int]], List[Plan]]] = {
    "grs": _grs,
    "grm": _grm,
    "hyperoval": _hyperoval,
    "plotkin": _plotkin,
    "theorem3": _theorem3,
    "theorem4": _theorem4,
    "theorem6": _theorem6,
    "theorem7": _theorem7,
    "corollary-selfdual": _corollary,
}


def build_family(family: str, params: Dict[str, int]) -> List[Plan]:
    """Builds the codes of a family without certifying them.

    :raises UnknownFamilyError: If the family is not known.
    """
    builder = FAMILIES.get(family)
    if builder is None:
        raise UnknownFamilyError(
            f"{family!r} is not one of {', '.join(FAMILIES)}"
        )
    return builder(params)


class WorkbenchImpl(Workbench):
    def __init__(self, options: WorkbenchOptions):
        self.options = options

    def construct(
        self, family: str, params: Dict[str, int]
    ) -> List[CodeReport]:
        logging.info("Constructing %s with %s", family, params)
        reports = []
        for built, metric, checks in build_family(family, params):
            if metric == HAMMING:
                report = self.certify(
                    built.code,
                    built.name,
                    built.params,
                    checks=checks,
                    hamming_predicted=built.predicted,
                    hamming_certificate=built.certificate,
                )
            else:
                report = self.certify(
                    built.code,
                    built.name,
                    built.params,
                    built.predicted,
                    built.certificate,
                    checks,
                )
            reports.append(report)
        return reports

    def certify(
        self,
        code: LinearCode,
        name: str,
        params: Optional[Dict[str, int]] = None,
        predicted: Optional[int] = None,
        certificate: Optional[galois.FieldArray] = None,
        checks: Sequence[str] = (),
        hamming: bool = True,
        hamming_predicted: Optional[int] = None,
        hamming_certificate: Optional[galois.FieldArray] = None,
    ) -> CodeReport:
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise InvalidConfigError(f"unknown checks {unknown}")
        report = CodeReport(
            name=name,
            field_header=code.field.header(),
            n=code.n,
            k=code.k,
            params=dict(params or {}),
            flags=CodeFlags(),
            predicted=predicted,
            seed=self.options.seed,
            budget=self.options.budget,
            w_max=self.options.w_max,
        )
        if hamming or hamming_predicted is not None:
            report.d_hamming = self._hamming_claim(
                code, hamming_predicted, hamming_certificate
            )
        if report.d_hamming is not None and report.d_hamming.verified:
            report.hamming_defect = (
                code.n - code.k + 1 - report.d_hamming.value
            )
            report.flags.hamming_mds = report.hamming_defect == 0
        if code.n % 2 == 0:
            report.flags.so = is_symplectic_so(code)
            report.flags.dc = is_symplectic_dc(code)
            report.flags.selfdual = is_symplectic_selfdual(code)
            if code.k:
                report.flags.lcd = is_symplectic_lcd(code)
            report.d_symplectic = self._symplectic_claim(
                code, predicted, certificate
            )
            claim = report.d_symplectic
            if claim is not None and claim.verified:
                report.symplectic_defect = symplectic_singleton_defect(
                    code, claim.value
                )
                report.flags.symplectic_mds = report.symplectic_defect == 0
        report.failures = self._failures(
            report, checks, hamming_predicted
        )
        logging.info(
            "%s [%s,%s] d_H=%s d_s=%s failures=%s",
            name,
            code.n,
            code.k,
            _value(report.d_hamming),
            _value(report.d_symplectic),
            report.failures,
        )
        return report

    def check(self, code: LinearCode, checks: Sequence[str]) -> CodeReport:
        return self.certify(code, "import", checks=checks)

    def table1(
        self, rows: Optional[Sequence[Table1Row]] = None
    ) -> Table1Report:
        report = Table1Report(budget=self.options.budget)
        for row in TABLE1_ROWS if rows is None else rows:
            try:
                built = build_row(row)
                code_report = self.certify(
                    built.code,
                    built.name,
                    built.params,
                    built.predicted,
                    built.certificate,
                    hamming=False,
                )
                outcome = judge_row(row, code_report)
            except WorkbenchError as e:
                outcome = Table1Outcome(
                    row, False, None, e.problem_details.detail
                )
            logging.info(
                "%s: %s", row, "PASS" if outcome.passed else "FAIL"
            )
            report.outcomes.append(outcome)
        return report

    def lcd_search(
        self, code: LinearCode, config: SearchConfig, name: str = "import"
    ) -> LcdSearchReport:
        outcome = search_lcd_permutation(code, config, self.options.workers)
        report = LcdSearchReport(
            name=name,
            n=code.n,
            k=code.k,
            q=code.q,
            seed=outcome.seed,
            trials=outcome.trials,
        )
        if outcome.permutation is not None:
            report.permutation = outcome.permutation.format()
            report.codes = self.verify_theorem9_import(
                code, outcome.permutation
            )
        return report

    def verify_theorem9_import(
        self,
        code: LinearCode,
        permutation: Permutation,
        claimed: Optional[int] = None,
    ) -> List[CodeReport]:
        lcd, dual = build_theorem9_codes(code, permutation)
        params = {"n": code.n, "k": code.k}
        d1, u = self._known_hamming(code)
        d2, v = self._known_hamming(dual_euclidean(code))
        if claimed is not None and d1 is None:
            d1 = claimed
        zero = code.field.GF.Zeros(code.n)
        certificate = None if u is None else plotkin_word(u, zero)
        dual_certificate = None if v is None else plotkin_word(zero, v)
        return [
            self.certify(
                lcd,
                "theorem9.lcd",
                params,
                d1,
                certificate,
                ("lcd",),
                hamming=False,
            ),
            self.certify(
                dual,
                "theorem9.dual",
                params,
                d2,
                dual_certificate,
                ("lcd",),
                hamming=False,
            ),
        ]

    def _fits(self, code: LinearCode) -> bool:
        return projective_count(code.q, code.k) <= self.options.budget

    def _known_hamming(
        self, code: LinearCode
    ) -> Tuple[Optional[int], Optional[galois.FieldArray]]:
        if code.k == 0 or not self._fits(code):
            return None, None
        return min_hamming_distance(
            code, self.options.budget, self.options.workers
        )

    def _hamming_claim(
        self,
        code: LinearCode,
        predicted: Optional[int],
        certificate: Optional[galois.FieldArray],
    ) -> Optional[DistanceClaim]:
        if code.k == 0:
            return None
        if self._fits(code):
            d, word = min_hamming_distance(
                code, self.options.budget, self.options.workers
            )
            return DistanceClaim(
                d, EXHAUSTIVE, "projective enumeration", _ints(word)
            )
        if predicted is None:
            return None
        if (
            certificate is not None
            and code.contains(certificate)
            and _hamming_weight(certificate) == predicted
        ):
            return DistanceClaim(
                predicted, CERTIFICATE, "codeword verified", _ints(certificate)
            )
        return DistanceClaim(predicted, FORMULA, "construction bound")

    def _symplectic_claim(
        self,
        code: LinearCode,
        predicted: Optional[int],
        certificate: Optional[galois.FieldArray],
    ) -> Optional[DistanceClaim]:
        if code.k == 0:
            return None
        if self._fits(code):
            d, word = min_symplectic_distance(
                code, self.options.budget, self.options.workers
            )
            return DistanceClaim(
                d, EXHAUSTIVE, "projective enumeration", _ints(word)
            )
        w_max = self.options.w_max
        if predicted is None:
            if w_max is None:
                return None
            found = bounded_symplectic_weight_search(code, w_max)
            if found is None:
                logging.info("No codeword of weight <= %s", w_max)
                return None
            return _bounded(*found)
        limit = predicted - 1 if w_max is None else min(w_max, predicted - 1)
        found = (
            bounded_symplectic_weight_search(code, limit) if limit else None
        )
        if found is not None:
            logging.warning(
                "Codeword of weight %s below the predicted %s",
                found[0],
                predicted,
            )
            return _bounded(*found)
        valid = (
            certificate is not None
            and code.contains(certificate)
            and symplectic_weight(certificate) == predicted
        )
        if limit == predicted - 1:
            if valid:
                return DistanceClaim(
                    predicted,
                    BOUNDED,
                    f"none up to {limit}, certificate of weight {predicted}",
                    _ints(certificate),
                )
            found = bounded_symplectic_weight_search(code, predicted)
            if found is None:
                logging.warning(
                    "No codeword of the predicted weight %s", predicted
                )
                return None
            return _bounded(*found)
        if valid:
            return DistanceClaim(
                predicted,
                CERTIFICATE,
                f"codeword verified, searched up to {limit}",
                _ints(certificate),
            )
        return DistanceClaim(predicted, FORMULA, "construction bound")

    def _failures(
        self,
        report: CodeReport,
        checks: Sequence[str],
        hamming_predicted: Optional[int],
    ) -> List[str]:
        flags = report.flags
        holds = {
            "so": flags.so,
            "dc": flags.dc,
            "selfdual": flags.selfdual,
            "lcd": flags.lcd,
            "mds": flags.hamming_mds,
            "symplectic-mds": flags.symplectic_mds,
            "distance": report.d_symplectic is not None
            and report.d_symplectic.verified,
        }
        failures = [c for c in checks if not holds[c]]
        if report.predicted is not None and not _agrees(
            report.d_symplectic, report.predicted
        ):
            failures.append("predicted-distance")
        if hamming_predicted is not None and not _agrees(
            report.d_hamming, hamming_predicted
        ):
            failures.append("predicted-hamming-distance")
        return failures


def _bounded(weight: int, word: galois.FieldArray) -> DistanceClaim:
    return DistanceClaim(
        weight, BOUNDED, f"searched up to {weight}", _ints(word)
    )


def _value(claim: Optional[DistanceClaim]) -> Optional[int]:
    return None if claim is None else claim.value


def _agrees(claim: Optional[DistanceClaim], predicted: int) -> bool:
    # an unverified claim only repeats the prediction
    return claim is not None and claim.value == predicted


class WorkbenchBuilder:
    """The `Workbench` builder.

    Example::

        options = WorkbenchOptions(budget=2**20, workers=4)
        workbench = WorkbenchBuilder(options).build()
        reports = workbench.construct("theorem6", {"m": 2})
    """

    def __init__(self, options: Optional[WorkbenchOptions] = None):
        """Creates the builder for the given options.

        :param options: Budgets, seed and thread count; the defaults of
            `WorkbenchOptions` when `None`.
        """
        self.options = options or WorkbenchOptions()

    def build(self) -> Workbench:
        """Builds the workbench.

        :return: The `Workbench` object.
        """
        return WorkbenchImpl(self.options)


def appendix_permutation(name: str) -> Permutation:
    """A stored permutation by name, "P46" through "P74".

    :raises InvalidConfigError: If no permutation has that name.
    """
    images = APPENDIX_PERMUTATIONS.get(name.upper())
    if images is None:
        raise InvalidConfigError(
            f"{name!r} is not one of {', '.join(APPENDIX_PERMUTATIONS)}"
        )
    return Permutation(images)
