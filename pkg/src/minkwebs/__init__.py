"""Separable webs and concircular tensors in 3-dimensional Minkowski space.

The package classifies concircular tensors (CTs) on E^3_1, catalogs the 45
orthogonal separable webs they generate together with their 88 coordinate
charts, and provides evaluation, inversion, Killing-tensor and
warped-product machinery with a verification CLI.
"""
from .core import METRIC, vec, dot, lower, raise_index, DualScalar, dual_vars
from .errors import MinkwebsError
from .concircular import (ConcircularTensor, classify_ct, evaluate_ct,
                          is_reducible, point_eigenvalues, ct_from_dict,
                          ct_to_dict)
from .elliptic import elliptic_K, jacobi_elliptic
from .ictcoords import SeparableTriple, ict_invert
from .killing import ks_algebra, killing_residual, diagonality_residual
from .warped import (decompose_reducible, build_warped_product, wp_map,
                     wp_image_contains)
from .catalog import (list_webs, list_charts, web_by_id, charts_for_web,
                      chart_map, chart_invert, chart_metric_eval,
                      pullback_residual, region_contains, sample_triple)

__version__ = "0.1.0"
