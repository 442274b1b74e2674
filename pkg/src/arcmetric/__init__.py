"""Geodesic lengths on Teichmüller spaces of the one-holed / punctured torus
and of glued pants surfaces, with finite-family estimates of the arc metric
and the Thurston metric."""

from .errors import (ArcMetricError, AssemblyError, CuspArcError, DegenerateError,
                     DomainError, EllipticError, EmptyFamilyError, ParabolicError,
                     PeriodicOrReducibleError, SearchDomainError)
from .hyptrig import (INF, Geodesic, axis_endpoints, collar_width, geodesic_distance,
                      mat2, pants_arc_one_cuff, pants_arc_two_cuffs, quad_side,
                      translation_length)
from .mcg import (Kind, MappingClass, SearchConfig, TranslationEstimate, act_slope,
                  classify, dilatation, dilatation_by_iteration, displacement,
                  tau_estimate, translation_estimate, twist_pinch_experiment)
from .metrics import Family, MetricEstimate, dhat, farey_family, iterate_family, ratio
from .pantsnet import (FNPoint, GluedRep, PantsDecomp, build_glued_rep, build_pants_rep,
                       word_length)
from .pinch import SweepRow, arc_residual, pinch_sweep, psi, psi_inv, quad_ratio_check
from .torus import (DualArc, FNTorus, Rep, Slope, build_rep, curve_length,
                    dual_arc_length, slope_word)

__version__ = "0.1.0"
