"""Exact module-structure computations for the rank-three real symplectic
principal series: triangular-pattern combinatorics, monomial-basis actions,
tensor-product injectors, contiguous relations, invariant operators in normal
order, and the radial holonomic systems of Whittaker functions."""

from .gtpattern import (Pattern, SigmaChar, enumerate_patterns, l_index,
                        l_sigma_index, sigma_enumerate, validate, weyl_dim)

__all__ = ["Pattern", "SigmaChar", "enumerate_patterns", "l_index",
           "l_sigma_index", "sigma_enumerate", "validate", "weyl_dim"]
__version__ = "0.1.0"
