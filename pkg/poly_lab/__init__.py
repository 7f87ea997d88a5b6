"""
Exact polynomial utilities: W-transform, Eulerian polynomials, tails, f/h vectors
"""

from .models import FVector, HVector
from .transforms import (
    binomial,
    chromatic_from_w,
    eulerian_polynomial,
    f_to_h,
    h_to_f,
    hilbert_series_numerator,
    series_coefficients,
    shift_down,
    tail_polynomial,
    truncated_boolean_f_vector,
    vector_sum,
    w_top_coefficient,
    w_transform,
)

__all__ = [
    'FVector', 'HVector',
    'binomial', 'chromatic_from_w', 'eulerian_polynomial', 'f_to_h', 'h_to_f',
    'hilbert_series_numerator', 'series_coefficients', 'shift_down', 'tail_polynomial',
    'truncated_boolean_f_vector', 'vector_sum', 'w_top_coefficient', 'w_transform',
]
