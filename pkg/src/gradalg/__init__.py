"""Graded convolution algebras with certified numerics.

Unions of weighted sequence spaces over discrete semigroups, closed under
convolution with two-level norm inequalities; coupling constants carry
rigorous truncation bounds, inversion comes with residual certificates, and
the continuous instances are verified by quadrature with explicit error
budgets.
"""

from .calculus import (
    Certificate,
    GeometricEnvelope,
    InversionCertificate,
    PowerSeriesSpec,
    apply_series,
    exponential_series,
    find_level,
    geometric_series,
    invert,
    neumann_invert,
    polynomial_series,
    spectrum_radius_bound,
)
from .continuous import (
    PiecewiseConstant,
    QuadratureSpec,
    SummatoryFunction,
    axb_constants,
    axb_quadrature,
    mellin,
    p_convolve,
    verify_p_inequality,
    verify_totient_inequality,
    verify_zeta_inequality,
)
from .elements import (
    GradedElement,
    convolve,
    delta,
    linear_combine,
    norm,
    oracle_convolve,
    random_element,
    scale,
    unit,
    zero,
)
from .report import VerificationReport, make_report
from .semigroups import (
    MultiIndex,
    Nat,
    SemigroupIndex,
    Word,
    compose,
    decompositions,
    parse_index,
)
from .weights import (
    CouplingValue,
    WeightFamily,
    Witness,
    check_submultiplicative,
    coupling,
    custom,
    family_by_name,
    free_kondratiev,
    germs,
    hs_norm,
    kondratiev,
    ratio_sum,
    sprime,
)

__version__ = "0.1.0"
