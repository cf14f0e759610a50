"""Periodic-Bernoulli integral representations, Addison-type series and
multi-route evaluation of the associated constants."""

from .result import (DomainError, Eval, EvaluationError, PoleError, PrecisionError,
                     TruncationError)
from .quad import QuadSpec, integrate_finite, integrate_p1, integrate_semi_inf
from .zetafun import hurwitz, hurwitz_sderiv, stieltjes, zeta, zeta_nderiv
from .lerch import lerch_phi, lerch_series_oracle, polylog
from .clausen import catalan, dirichlet_L4
from .refine import gamma_addison, zeta_prime_addison
from .constants import euler_sum_H, registry, somos_ln
from .kinkelin import gamma_moment_sin, gamma_moment_x
from .negazeta import a_k

__all__ = [
    "Eval", "DomainError", "PoleError", "EvaluationError", "TruncationError", "PrecisionError",
    "QuadSpec", "integrate_finite", "integrate_p1", "integrate_semi_inf",
    "hurwitz", "hurwitz_sderiv", "stieltjes", "zeta", "zeta_nderiv",
    "lerch_phi", "lerch_series_oracle", "polylog",
    "catalan", "dirichlet_L4",
    "gamma_addison", "zeta_prime_addison",
    "euler_sum_H", "registry", "somos_ln",
    "gamma_moment_sin", "gamma_moment_x",
    "a_k",
]

# the functions clausen() and kinkelin() live in the submodules of the same
# name and are not re-exported, so that ``addison.clausen`` stays the module
