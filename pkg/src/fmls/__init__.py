"""European call pricing under the finite-moment log-stable model.

Four engines share one set of market/model records:

- ``price_series``: the closed-form double residue series (the fast path);
- ``gil_pelaez_price``: Fourier inversion of the characteristic function;
- ``discretized_price``: convolution of the payoff with a sampled
  Mellin-Barnes density grid;
- ``bs_price``: the Black-Scholes closed form, exact at stability index 2.
"""

from .bs import (
    atmf_term_alternating,
    atmf_term_half_integer_gamma,
    bs_atmf_price,
    bs_price,
)
from .charfn import QuadratureSettings, char_fn, gil_pelaez_price
from .errors import (
    ConvergenceError,
    NumericalError,
    QuadratureError,
    SeriesOverflowError,
)
from .greens import (
    BoundaryMassWarning,
    DensityGrid,
    MellinLineSettings,
    build_density_grid,
    cahen_mellin_exp,
    default_pricing_grid,
    discretized_price,
    stable_density,
    stable_density_values,
)
from .model import (
    ENGINES,
    OptionSpec,
    PricingResult,
    StableModel,
    log_moneyness,
    martingale_drift,
)
from .series import (
    SeriesTable,
    Truncation,
    atmf_bs_series,
    convergence_table,
    implied_vol,
    price_series,
    series_term,
)
from .special_functions import (
    ln_gamma_complex,
    ln_gamma_real,
    normal_cdf,
    reciprocal_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "ENGINES",
    "BoundaryMassWarning",
    "ConvergenceError",
    "DensityGrid",
    "MellinLineSettings",
    "NumericalError",
    "OptionSpec",
    "PricingResult",
    "QuadratureError",
    "QuadratureSettings",
    "SeriesOverflowError",
    "SeriesTable",
    "StableModel",
    "Truncation",
    "atmf_bs_series",
    "atmf_term_alternating",
    "atmf_term_half_integer_gamma",
    "bs_atmf_price",
    "bs_price",
    "build_density_grid",
    "cahen_mellin_exp",
    "char_fn",
    "convergence_table",
    "default_pricing_grid",
    "discretized_price",
    "gil_pelaez_price",
    "implied_vol",
    "ln_gamma_complex",
    "ln_gamma_real",
    "log_moneyness",
    "martingale_drift",
    "normal_cdf",
    "price_series",
    "reciprocal_gamma",
    "series_term",
    "stable_density",
    "stable_density_values",
]
