"""Number theory toolkit built on prime exponent vectors.

Factorization of 64-bit integers, n-ary gcd/lcm as pointwise min/max of
exponent vectors, Euclidean ratio reduction, Landau's maximal-lcm-over-
partitions function, and permutation order, each paired with an
independent cross-check.
"""

from .errors import DomainError
from .factorization import (
    Factorization,
    factorize,
    is_prime,
    primes_up_to,
    reconstruct,
)
from .gcdlcm import (
    DistributiveCheck,
    GcdLcmResult,
    ProductCheck,
    ReducedRatio,
    check_distributive_identity,
    check_product_identity,
    gcd_euclid,
    gcd_lcm_set,
    reduce_ratio,
)
from .landau import (
    LandauRecord,
    Partition,
    asymptotic_table,
    landau_bruteforce,
    landau_dp,
    partition_count,
    partitions,
)
from .lattice import ExponentVector, PrimeSupport, align, add, dominates, join, meet
from .permutation import CycleDecomposition, cycle_decompose, order, verify_order
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Factorization",
    "factorize",
    "is_prime",
    "primes_up_to",
    "reconstruct",
    "GcdLcmResult",
    "ReducedRatio",
    "ProductCheck",
    "DistributiveCheck",
    "gcd_lcm_set",
    "gcd_euclid",
    "reduce_ratio",
    "check_product_identity",
    "check_distributive_identity",
    "PrimeSupport",
    "ExponentVector",
    "align",
    "meet",
    "join",
    "add",
    "dominates",
    "Partition",
    "LandauRecord",
    "partitions",
    "partition_count",
    "landau_bruteforce",
    "landau_dp",
    "asymptotic_table",
    "CycleDecomposition",
    "cycle_decompose",
    "order",
    "verify_order",
    "SplitMix64",
    "__version__",
]
