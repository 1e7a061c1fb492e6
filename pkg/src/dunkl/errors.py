"""Exception types raised across the package.

Every error carries a short machine-readable ``code`` so the CLI can emit a
structured message on stderr.
"""


class DunklError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def as_dict(self):
        out = {"error": self.code, "message": str(self)}
        out.update({k: _plain(v) for k, v in self.details.items()})
        return out


def _plain(v):
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


class ParseError(DunklError):
    code = "parse_error"


class NonDivisible(DunklError):
    code = "non_divisible"


class DimensionMismatch(DunklError):
    code = "dimension_mismatch"


class SymbolicParameterRemaining(DunklError):
    code = "symbolic_parameter_remaining"


class TooManyParameters(DunklError):
    code = "too_many_parameters"


class NotAPartition(DunklError):
    code = "not_a_partition"


class NotClosed(DunklError):
    code = "not_closed"


class NotReduced(DunklError):
    code = "not_reduced"


class IrrationalCoordinates(DunklError):
    code = "irrational_coordinates"


class GroupTooLarge(DunklError):
    code = "group_too_large"


class NotInGroup(DunklError):
    code = "not_in_group"


class UnknownType(DunklError):
    code = "unknown_type"


class NotHomogeneous(DunklError):
    code = "not_homogeneous"


class SingularParameter(DunklError):
    code = "singular_parameter"


class SingularGamma(SingularParameter):
    code = "singular_gamma"


class SeparationFailure(DunklError):
    code = "separation_failure"


class NotAComposition(DunklError):
    code = "not_a_composition"


class ToleranceUnreachable(DunklError):
    code = "tolerance_unreachable"


class NumericModeRequired(DunklError):
    code = "numeric_mode_required"


class ExactModeRequired(DunklError):
    code = "exact_mode_required"


class NotOneClass(DunklError):
    code = "not_one_class"


class LengthMismatch(DunklError):
    code = "length_mismatch"


class RecurrencePole(DunklError):
    code = "recurrence_pole"


class ZeroDenominator(DunklError):
    code = "zero_denominator"


class GammaPole(DunklError):
    code = "gamma_pole"
