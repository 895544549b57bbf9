"""Laboratory for query complexity of DLOG, CDH and DDH in identity
black-box groups: quotients of Z_p^(t+1) by a hyperplane that is hidden
behind a membership oracle.

The main entry points re-exported here cover field arithmetic, oracles
with honest query accounting, every reduction between the three problems,
the exhaustive adversary-bound computation at small primes, the Grover
search simulator and the reproducible experiment harness.
"""

from .adversary import (
    AdversaryReport,
    ClassifiedVector,
    adversary_bounds,
    classify,
    sigma_gamma,
    sigma_gamma_h,
)
from .algorithms import (
    CdhOracle,
    DHInstance,
    DishonestOracleError,
    DlogOracle,
    EmbeddedOracle,
    NotAGeneratorError,
    brute_force_hidden_vector,
    brute_force_secret,
    cdh_given_secret,
    ddh_decide_by_search,
    ddh_decide_level1,
    dlog_given_secret,
    embed_generic_group,
    honest_cdh_oracle,
    honest_dlog_oracle,
    lift_instance,
    lift_oracle,
    project_cdh_answer,
    secret_from_cdh,
    secret_from_cdh_random,
    secret_from_dlog,
    secret_from_dlog_random,
)
from .blackbox import (
    Escrow,
    EscrowError,
    GroupElement,
    GroverOracle,
    IdentityOracle,
    LinearPoly,
    NormalVector,
    QueryBudgetExceeded,
    RawOracle,
    canonical_element,
    coset_label,
    equal_in_group,
    field_mul,
    grover_from_identity,
    identity_from_grover,
    normalize_oracle,
    random_identity_oracle,
)
from .experiments import (
    ExperimentConfig,
    run_level2_solution_counts,
    run_reduction_success,
    run_scaling,
)
from .grover_sim import GroverRun, grover_search, quantum_query_curve
from .modmath import (
    ALL_RESIDUES,
    PrimeModulus,
    QuadraticPoly,
    Residue,
    find_nonresidue,
    is_prime,
    legendre,
    solve_quadratic,
    sqrt_mod,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_RESIDUES",
    "AdversaryReport",
    "CdhOracle",
    "ClassifiedVector",
    "DHInstance",
    "DishonestOracleError",
    "DlogOracle",
    "EmbeddedOracle",
    "Escrow",
    "EscrowError",
    "ExperimentConfig",
    "GroupElement",
    "GroverOracle",
    "GroverRun",
    "IdentityOracle",
    "LinearPoly",
    "NormalVector",
    "NotAGeneratorError",
    "PrimeModulus",
    "QuadraticPoly",
    "QueryBudgetExceeded",
    "RawOracle",
    "Residue",
    "adversary_bounds",
    "brute_force_hidden_vector",
    "brute_force_secret",
    "canonical_element",
    "cdh_given_secret",
    "classify",
    "coset_label",
    "ddh_decide_by_search",
    "ddh_decide_level1",
    "dlog_given_secret",
    "embed_generic_group",
    "equal_in_group",
    "field_mul",
    "find_nonresidue",
    "grover_from_identity",
    "grover_search",
    "honest_cdh_oracle",
    "honest_dlog_oracle",
    "identity_from_grover",
    "is_prime",
    "legendre",
    "lift_instance",
    "lift_oracle",
    "normalize_oracle",
    "project_cdh_answer",
    "quantum_query_curve",
    "random_identity_oracle",
    "run_level2_solution_counts",
    "run_reduction_success",
    "run_scaling",
    "secret_from_cdh",
    "secret_from_cdh_random",
    "secret_from_dlog",
    "secret_from_dlog_random",
    "sigma_gamma",
    "sigma_gamma_h",
    "solve_quadratic",
    "sqrt_mod",
]
