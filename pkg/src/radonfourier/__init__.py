"""Closed-form calculus for translation-bounded Radon measures on the line.

Measures are finite sums of atoms, lattice combs and closed-form densities;
pairings, total variation, translation-bounded norms ``||mu||_K``, Fourier
transforms and convergence diagnostics (vague, tempered, product and norm
topologies) are computed exactly where possible and numerically with stated
tolerances otherwise.

Fourier convention: ``f^(y) = int f(x) e^{-2 pi i x y} dx``.
"""

from .errors import (MeasureError, NonIntegrable, TailBoundFailure, UnboundedLocalMass,
                     NotTransformableInModel, NoClosedForm, SupportViolation,
                     WindowConstructionFailure, InconsistencyDetected, PDCheckFailure,
                     UnknownExample)
from .densities import (ModulatedConstant, PiecewisePoly, Sinc, Sinc2, Tent, Periodized,
                        indicator, lebesgue)
from .measure import (CompactInterval, Atom, LatticeComb, Measure, dirac, dirac_comb,
                      lebesgue_measure, combine, pair, total_variation_on, norm_K, norm_report,
                      convolve_sup, sup_report, translate, reflect, scale, restrict, transform)
from .testfunctions import (TestFunction, PiecewiseTest, GaussHermite, Sinc2Test, tent,
                            gaussian, compact_bank, schwartz_bank, smooth_surrogate_bank)
from .descriptors import (DescriptorError, load_measure, dump_measure, measure_from_dict,
                          measure_to_dict, test_function_from_dict)
from .fourier import (fourier_transform, verify_pairing, smooth, approximate_identity,
                      krein_check, pd_bound_check, pd_bank)
from .topology import (MeasureSequence, Functional, CompactLadder, classify, gap,
                       vaguely_bounded, equi_translation_bounded, theorem_gate,
                       weighted_l1_constant, l1_bound, gap_verdict, bound_verdict)
from .diffraction import (van_hove_check, folner_cover, PointComb, lattice_comb, weighted_comb,
                          fibonacci_comb, fibonacci_point_comb, autocorrelation,
                          autocorrelation_trend, pd_cone_demo, norm_discontinuity_demo)
from .registry import get_example, run_case, run_all, EXAMPLE_IDS

__version__ = "0.1.0"
