"""Exact double Eisenstein series and the decomposition of Hecke eigenforms into them."""
from .exact import (
    ZetaPoly,
    bernoulli,
    binom,
    divisor_sigma,
    dzeta_symbol,
    zeta_symbol,
    zeta_tilde_even,
)
from .qseries import QSeries
from .modforms import SUPPORTED_WEIGHTS, UnsupportedWeight, delta, eigenform, eisenstein, hecke_tp
from .deisenstein import double_eisenstein, g_half, p_series
from .lfunc import RatioTable, coeff_vector, kz_check, lstar, qcoef, ratio_table, theorem_scalar
from .verify import VerifyReport, decompose

__version__ = "0.1.0"
