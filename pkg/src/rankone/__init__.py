"""Exact combinatorics and special-function scalars of the rank-one groups.

Subpackages cover the structural constants and exceptional spectral parameters
(groups), the M-spherical K-type lattices (ktypes), tensor decompositions with
an independent character oracle (tensor), terminating hypergeometric series
(hypergeom), the omega(H) recurrences and lambda scalars (spherical), the
Poisson-transform scalars nu and T with their vanishing loci (scalars), a
numerical Lorentz-matrix model of SO(n,1) (so_model), and a CLI (cli).
"""

from .groups import GroupFamily, SpectralParam, f4, so, sp, su

__all__ = ["GroupFamily", "SpectralParam", "so", "su", "sp", "f4"]
__version__ = "0.1.0"
