"""Exact motivic height zeta functions for split projective toric
varieties over the function field of a genus-0 curve."""

from .lefschetz import (CompletionElement, CurveData, LefschetzLaurent,
                        MINUS_INFINITY, L, ONE, ZERO, radius_estimate,
                        rational_curve, specialize_q, tauberian_transfer,
                        virtual_dim)
from .lattice import (CharFunction, CharSum, Lattice, Sublattice, fourier,
                      fourier_invert, integrate_dual, partial_integrate,
                      poisson_both_sides)
from .fan import (Fan, FanValidationError, anticanonical_degree,
                  class_of_variety, load_fan, preset_fan, q_sigma,
                  q_sigma_at_L_inv, validate_fan)
from .series import GradedMonomial, GradedSeries
from .euler import (LabeledPartition, LocalFactor, PlethysticSeries,
                    config_class, euler_product_genus0, plethystic_exp,
                    plethystic_log, torsor_twist)
from .conezeta import (ConeFan, ExactSequence, LSeriesRational, ResidueData,
                       char_restrict_check, chi_value, convolution_f1,
                       l_series_direction, residue_check, shifted_cone_check)
from .heightzeta import (LeadingConstant, ZetaSeries, leading_constant,
                         leading_constant_numeric, local_fourier_check,
                         local_height_factor, stabilization_check,
                         support_degrees, zeta_direct_genus0,
                         zeta_fourier_genus0)
from .fqoracle import (BudgetExceeded, CoxModel, FqCurve, NonIntegerQuotient,
                       closed_point_counts, count_hom_fq,
                       count_rational_maps_closed_form,
                       euler_product_specialize)

__version__ = "0.1.0"
