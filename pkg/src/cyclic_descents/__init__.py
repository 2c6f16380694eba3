"""
Cyclic Descents

Exact enumeration and verification for cyclic permutations whose descent sets are
lambda-unimodal: the necklace sets N_lambda, the map PPat_lambda, the necklace
counting formulas, and the symmetric-group characters they reproduce.
"""

from .config import VERSION
from .counting import a_lambda, bigL, chi, count_N_lambda_m, count_primitive_necklaces, mobius
from .errors import (
    ConfigError,
    CyclicDescentsError,
    InvalidCompositionError,
    InvalidPermutationError,
    InvalidWordError,
    NotInCLambdaError,
    NotInNLambdaError,
    UnknownIdentityError,
)
from .necklace import NecklaceClass, NLambdaMember, Word, enumerate_N_lambda, ppat, ppat_preimage, ppat_preimages
from .perm_core import Composition, DescentSet, Permutation, descent_set, enumerate_cyclic_lambda_unimodal
from .report import VerificationReport
from .tableaux import Partition, StandardTableau, mn_character, rho_multiplicities, rsk
from .verify import IdentityName, verify_suite

__version__ = VERSION

__all__ = [
    'Composition', 'DescentSet', 'Permutation', 'descent_set', 'enumerate_cyclic_lambda_unimodal',
    'Word', 'NecklaceClass', 'NLambdaMember', 'enumerate_N_lambda', 'ppat', 'ppat_preimage', 'ppat_preimages',
    'mobius', 'count_primitive_necklaces', 'bigL', 'count_N_lambda_m', 'a_lambda', 'chi',
    'Partition', 'StandardTableau', 'rsk', 'mn_character', 'rho_multiplicities',
    'VerificationReport', 'IdentityName', 'verify_suite',
    'CyclicDescentsError', 'InvalidPermutationError', 'InvalidCompositionError', 'InvalidWordError',
    'NotInNLambdaError', 'NotInCLambdaError', 'UnknownIdentityError', 'ConfigError',
]
