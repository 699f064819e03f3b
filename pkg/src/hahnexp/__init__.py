"""Exponential-logarithmic power series over iterated lexicographic powers."""

from .chain import (AutomorphismSpec, BaseElement, Lifted, StageOverflowError,
                    apply_automorphism, apply_base, base_compare, chain_compare,
                    hat_lift, iota, iota_inv, l_inv, l_map, stage_of)
from .explog import (LogContext, LogDomainError, check_ga, exp, hat_iota, log,
                     log_iterate, log_monomial, log_unit)
from .hahn import HahnElement, archimedean_equiv, hahn_compare, indicator, min_support
from .parsing import (ParseError, parse_chain, parse_expr, parse_hahn, parse_series,
                      render_chain, render_hahn, render_series)
from .rank import (Letter, RankWord, UndecidedError, base_descent, log_equivalent,
                   log_equivalent_search, rank_word_iso, sigma_equivalent,
                   sigma_equivalent_search, sigma_rank_word)
from .scalar import RATIONAL, DecimalBackend, RationalBackend, scalar_exp, scalar_log
from .series import Series, decompose, invert, monomial, series_compare, taylor_eval, valuation

__version__ = "0.1.0"
