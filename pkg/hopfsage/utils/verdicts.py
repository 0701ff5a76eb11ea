from enum import Enum


class Verdict(Enum):
    PROJECTIVE = 'projective'
    NOT_PROJECTIVE = 'not-projective'
    SIMPLE = 'simple'
    NOT_SIMPLE = 'not-simple'
    FIELD = 'field'
    NOT_FIELD = 'not-field'
    UNKNOWN = 'unknown'
    VALID = 'valid'
    INVALID = 'invalid'
    APPLICABLE = 'applicable'
    INAPPLICABLE = 'inapplicable'
    EXISTS = 'exists'
    NONE = 'none'
    HOLDS = 'holds'
    FAILS = 'fails'


class SplitContext(Enum):
    OVER_B = 'over-B'
    IN_CATEGORY = 'in-category'


class SimplicityFlag(Enum):
    CERTIFIED = 'simple-certified'
    PROBABLE = 'simple-probable'


class SimplicityRoute(Enum):
    """How a simple verdict was certified; each route can be re-run."""
    ONE_DIMENSIONAL = 'one-dimensional'
    EXHAUSTIVE = 'exhaustive'
    RADICAL_AND_ENDOMORPHISMS = 'radical-and-endomorphisms'
    OPERATOR_ALGEBRA = 'operator-algebra'


class ExactnessWitness(Enum):
    COSEMISIMPLE = 'H-cosemisimple'
    TOTAL_INTEGRAL = 'total-integral-exists'


class DaggerWitness(Enum):
    A_SEMISIMPLE = 'A-semisimple'
    A_EQUALS_H_COMMUTATIVE = 'A-equals-H-and-H-commutative'


class WitnessKind(Enum):
    SPLIT_OVER_B = 'split-over-B'
    SPLIT_IN_CATEGORY = 'split-in-category'
    DESCENDED_SPLIT = 'descended-split'
    TOTAL_INTEGRAL = 'total-integral'
    COSEMISIMPLE_INTEGRAL = 'cosemisimple-integral'
    H_IDEAL = 'H-ideal'
    DECOMPOSITION = 'decomposition'
    COINVARIANTS = 'coinvariants'
    MINIMAL_POLYNOMIAL = 'minimal-polynomial'
    SIMPLICITY = 'simplicity'


class ExitCode(Enum):
    SUCCESS = 0
    NEGATIVE = 1
    ERROR = 2


# Exit status each verdict maps to in the command-line driver
VERDICT_EXIT_CODES = {
    Verdict.PROJECTIVE: ExitCode.SUCCESS,
    Verdict.NOT_PROJECTIVE: ExitCode.NEGATIVE,
    Verdict.SIMPLE: ExitCode.SUCCESS,
    Verdict.NOT_SIMPLE: ExitCode.NEGATIVE,
    Verdict.FIELD: ExitCode.SUCCESS,
    Verdict.NOT_FIELD: ExitCode.NEGATIVE,
    Verdict.UNKNOWN: ExitCode.ERROR,
    Verdict.VALID: ExitCode.SUCCESS,
    Verdict.INVALID: ExitCode.NEGATIVE,
    Verdict.APPLICABLE: ExitCode.SUCCESS,
    Verdict.INAPPLICABLE: ExitCode.SUCCESS,
    Verdict.EXISTS: ExitCode.SUCCESS,
    Verdict.NONE: ExitCode.NEGATIVE,
    Verdict.HOLDS: ExitCode.SUCCESS,
    Verdict.FAILS: ExitCode.NEGATIVE,
}
