"""
Exception hierarchy

Every error raised on bad input derives from both CyclicDescentsError and
ValueError, so callers can catch either.
"""


class CyclicDescentsError(Exception):
    """Base class for all library errors"""


class InvalidPermutationError(CyclicDescentsError, ValueError):
    """Entries are not a bijection on 1..n, or a cycle listing repeats a value"""


class InvalidCompositionError(CyclicDescentsError, ValueError):
    """Composition or partition with no parts, a non-positive part, or bad ordering"""


class InvalidWordError(CyclicDescentsError, ValueError):
    """Word letters outside the alphabet {0..2k-1}"""


class NotInNLambdaError(CyclicDescentsError, ValueError):
    """
    A word is not a representative of a necklace in N_lambda.

    Attributes:
        clause: Which membership clause failed ('size', 'alphabet', 'content', 'primitivity')
    """

    def __init__(self, message: str, clause: str):
        super().__init__(message)
        self.clause = clause


class NotInCLambdaError(CyclicDescentsError, ValueError):
    """A permutation is not a lambda-unimodal cycle"""


class UnknownIdentityError(CyclicDescentsError, ValueError):
    """Verification suite asked for an identity name it does not know"""


class ConfigError(CyclicDescentsError, ValueError):
    """Invalid command-line or environment configuration"""
