"""Pattern-avoiding permutations with fixed prefixes: closed-form counts, an
exhaustive enumeration oracle, and leading-term Wilf classification."""

from .core import (
    Pattern,
    Permutation,
    PermutationError,
    PrefixQuery,
    ancestors,
    avoids_all,
    complement,
    complement_pattern,
    contains_pattern,
    count_shuffles,
    descendants,
    enumerate_shuffles,
    matching_permutation,
    standardize,
    subpermutation,
)
from .formulas import (
    CountOutcome,
    PrefixAnalysis,
    analyze_prefix,
    count,
    count_pair_3412_3421,
    count_pair_length3,
    count_single_length3,
)
from .kernel import BACKEND
from .oracle import OracleResult, enumerate_avoiders, leading_term_vector
from .sequences import ballot, bell, binomial, catalan, schroder, simion_schmidt_a
from .wilf import WilfClassification, classify_r_wilf, table2, table3

__version__ = "0.1.0"
