"""Hurwitz-type zeta functions of higher order and their exact reductions.

The package keeps two layers deliberately separate: an exact layer
(Stirling numbers, Bernoulli numbers and polynomials of any order, formal
Laurent series around t = 0) where identities hold coefficient by
coefficient, and a numeric layer (Hurwitz zeta continuation, series
oracles, Mellin-integral quadrature) with stated error budgets.  The
verify module runs both against each other over registered identity
grids, including the as-printed variants we believe are typos.
"""

from .bernoulli import (
    RationalPoly,
    bernoulli_number,
    bernoulli_poly,
    norlund_number,
    norlund_poly,
    umbral_power,
)
from .errors import (
    DivergenceError,
    DomainError,
    EvaluationError,
    PoleError,
    QuadratureError,
)
from .exactcore import (
    binomial,
    iter_compositions,
    kronecker_orthogonality,
    multinomial,
    stirling1_unsigned,
    stirling2,
)
from .hurwitz import (
    EvalParams,
    default_shift_count,
    hurwitz_zeta,
    hurwitz_zeta_neg,
    multi_hurwitz,
    multi_hurwitz_neg,
    multi_hurwitz_series,
)
from .powerseries import (
    FTermExpansion,
    LaurentSeries,
    expand_F_derivative,
    expand_G_derivative,
    series_of_F,
    series_of_G,
    series_of_b,
    series_of_f,
)
from .verify import (
    GridSpec,
    IdentityReport,
    available_identities,
    check_against_manifest,
    run_identity,
    run_suite,
    summarize,
)
from .zetaops import (
    z_multi,
    z_multi_neg,
    z_multi_neg_series,
    z_multi_quadrature,
    z_multi_series,
    z_single_hurwitz,
    z_single_multizeta,
    z_single_quadrature,
    zhat_sides,
)

__version__ = "0.1.0"

__all__ = [
    "DivergenceError",
    "DomainError",
    "EvalParams",
    "EvaluationError",
    "FTermExpansion",
    "GridSpec",
    "IdentityReport",
    "LaurentSeries",
    "PoleError",
    "QuadratureError",
    "RationalPoly",
    "available_identities",
    "bernoulli_number",
    "bernoulli_poly",
    "binomial",
    "check_against_manifest",
    "default_shift_count",
    "expand_F_derivative",
    "expand_G_derivative",
    "hurwitz_zeta",
    "hurwitz_zeta_neg",
    "iter_compositions",
    "kronecker_orthogonality",
    "multi_hurwitz",
    "multi_hurwitz_neg",
    "multi_hurwitz_series",
    "multinomial",
    "norlund_number",
    "norlund_poly",
    "run_identity",
    "run_suite",
    "series_of_F",
    "series_of_G",
    "series_of_b",
    "series_of_f",
    "stirling1_unsigned",
    "stirling2",
    "summarize",
    "umbral_power",
    "z_multi",
    "z_multi_neg",
    "z_multi_neg_series",
    "z_multi_quadrature",
    "z_multi_series",
    "z_single_hurwitz",
    "z_single_multizeta",
    "z_single_quadrature",
    "zhat_sides",
    "__version__",
]
