"""Certified resolvent and spectral-distance bounds for exponential classes."""

import json

from ._core import (
    CertifiedValue,
    ClassParams,
    DepartureEstimate,
    arrange,
    combined_exponent,
    departure_rate,
    departure_upper,
    eigenvalues,
    f_eval,
    f_upper_closed_form,
    g_eval,
    g_invert,
    gallery_convolution,
    gallery_cyclic,
    gallery_shift,
    gallery_weyl,
    gauge_of_sequence,
    h_eval,
    hausdorff_distance,
    operator_gauge,
    resolvent_bound,
    resolvent_norm,
    singular_values,
)
from . import _core


def verify(suite="all", seed=7, budget=100):
    """Run a property suite; returns the report as a dict."""
    return json.loads(_core._verify(suite, seed, budget))


def bound_resolvent(matrix, a, alpha, grid=(40, 40)):
    return json.loads(_core._bound_resolvent(matrix, ClassParams(a, alpha), grid[0], grid[1]))


def bound_spectral(matrix_a, matrix_b, a, alpha):
    return json.loads(_core._bound_spectral(matrix_a, matrix_b, ClassParams(a, alpha)))
