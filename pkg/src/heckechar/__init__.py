"""Groups of Hecke quasi-characters over number fields.

Construction of the character lattice and its dual, evaluation at ideals,
local decomposition, conductors, the algebraic/almost-algebraic subgroup, and
the Dirichlet-series data of the associated L-functions.
"""

__version__ = "0.1.0"
