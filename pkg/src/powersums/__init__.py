"""Difference-set constructions, power-sum spectra, bound certificates,
and multi-start minimax search over constrained complex tuples."""

from .bounds import (
    BoundReport,
    EqualityCertificate,
    applicable_lower_bound,
    cassels_bound,
    known_construction,
    ncs_bound,
    prime_bracket,
    reference_values,
    verify_theorem1,
    verify_theorem2,
)
from .difference_sets import (
    DifferenceCertificate,
    DifferenceSet,
    bose,
    certificate_matches_kind,
    certify,
    ruzsa,
    singer,
)
from .errors import (
    NotPrime,
    NotPrimePower,
    NotPrimitive,
    ParamViolation,
    PowersumsError,
    RangeViolation,
    SearchExhausted,
)
from .exact import ExactSqrt
from .finite_field import (
    DlogTable,
    ExtensionField,
    FieldCtx,
    FieldElement,
    PrimeField,
    build_field,
    dlog_table,
    element_order,
)
from .numtheory import (
    Factorization,
    PrimePower,
    as_prime_power,
    factorize,
    is_prime,
    smallest_primitive_root,
)
from .optimizer import (
    MatchReport,
    SearchResult,
    SearchSpec,
    canonicalize,
    compare_to_construction,
    minimize,
    objective,
)
from .power_sums import (
    PowerSumSystem,
    Spectrum,
    SpectrumCheck,
    check_spectrum,
    expected_spectrum,
    from_difference_set,
    load_system,
    parseval_sum,
    spectrum,
    spectrum_components,
    turan_tuple,
    write_spectrum_csv,
)

__version__ = "0.1.0"
