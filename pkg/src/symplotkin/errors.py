from dataclasses import dataclass, field
from typing import Dict, List, Optional


def problem_details_errors_factory() -> Optional[Dict[str, List[str]]]:
    return dict()


@dataclass
class ProblemDetails:
    """Problem details for a failed workbench operation.

    `error_code` is stable and machine readable, `title` is a short
    human summary and `detail` names the offending values.
    """

    error_code: str
    title: str
    detail: Optional[str] = None
    errors: Optional[Dict[str, List[str]]] = field(
        default_factory=problem_details_errors_factory
    )


class WorkbenchError(Exception):
    """Thrown when a field, matrix, code or construction operation
    cannot be carried out.

    Access the problem details with `problem_details` field.
    """

    error_code = "workbench_error"
    title = "Workbench error"

    def __init__(
        self,
        detail: Optional[str] = None,
        problem_details: Optional[ProblemDetails] = None,
    ):
        if problem_details is None:
            problem_details = ProblemDetails(
                error_code=self.error_code, title=self.title, detail=detail
            )
        self.problem_details = problem_details
        super().__init__(detail)

    def __str__(self) -> str:
        return self.problem_details.__str__()


class NonPrimeError(WorkbenchError):
    error_code = "non_prime"
    title = "Characteristic is not a prime"


class FieldTooLargeError(WorkbenchError):
    error_code = "field_too_large"
    title = "Field order exceeds 2^16"


class DivisionByZeroError(WorkbenchError, ZeroDivisionError):
    error_code = "division_by_zero"
    title = "Division by the zero element"


class FieldMismatchError(WorkbenchError):
    error_code = "field_mismatch"
    title = "Operands belong to different fields"


class ShapeMismatchError(WorkbenchError):
    error_code = "shape_mismatch"
    title = "Matrix shapes are incompatible"


class LengthMismatchError(WorkbenchError):
    error_code = "length_mismatch"
    title = "Code or vector lengths differ"


class OddLengthError(WorkbenchError):
    error_code = "odd_length"
    title = "Symplectic operation needs an even length"


class ZeroCodeError(WorkbenchError):
    error_code = "zero_code"
    title = "Operation is undefined for the zero code"


class BudgetExceededError(WorkbenchError):
    error_code = "budget_exceeded"
    title = "Exhaustive enumeration exceeds the budget"


class DistanceUnknownError(WorkbenchError):
    error_code = "distance_unknown"
    title = "Minimum distance has not been established"


class DuplicatePointsError(WorkbenchError):
    error_code = "duplicate_points"
    title = "Evaluation points are not distinct"


class ZeroMultiplierError(WorkbenchError):
    error_code = "zero_multiplier"
    title = "Column multiplier is zero"


class UnsupportedLengthError(WorkbenchError):
    error_code = "unsupported_length"
    title = "No nested MDS pair is available for this length"


class ParameterOutOfRangeError(WorkbenchError):
    error_code = "parameter_out_of_range"
    title = "Construction parameters are out of range"


class OrderOutOfRangeError(WorkbenchError):
    error_code = "order_out_of_range"
    title = "Reed-Muller order is out of range"


class ConditionViolatedError(WorkbenchError):
    error_code = "condition_violated"
    title = "Construction condition is violated"


class NotPhiImageError(WorkbenchError):
    error_code = "not_phi_image"
    title = "Additive code has no stored symplectic preimage"


class SizeMismatchError(WorkbenchError):
    error_code = "size_mismatch"
    title = "Permutation size differs from code length"


class CriterionFailedError(WorkbenchError):
    error_code = "criterion_failed"
    title = "Permutation does not satisfy the LCD criterion"


class InvalidPermutationError(WorkbenchError):
    error_code = "invalid_permutation"
    title = "Array is not a permutation"


class InvalidConfigError(WorkbenchError):
    error_code = "invalid_config"
    title = "Invalid configuration"


class ConstructionNotFoundError(WorkbenchError):
    error_code = "construction_not_found"
    title = "Search for a construction ended without a result"


class UnknownFamilyError(WorkbenchError):
    error_code = "unknown_family"
    title = "Unknown code family"


class MatrixParseError(WorkbenchError):
    """Thrown when a matrix file is malformed.

    `line` is the 1-based line number of the offending line.
    """

    error_code = "parse_error"
    title = "Malformed matrix file"

    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"line {line}: {detail}")
