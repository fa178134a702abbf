"""Exact-arithmetic toolkit for branched covers of the quadric cone and plane.

Submodules
----------

wpoly    weighted rings, sparse rational polynomials, gcd/squarefree/resultant
textio   polynomial text grammar and canonical printer
linsys   monomial bases, vanishing conditions, exact ranks of linear systems
germs    plane-curve germ resolution, log-canonical thresholds, classification
locate   rational point location for singular loci and intersections
covers   double covers of the quadric cone, bi-double covers of the plane
canring  weighted hypersurface / complete intersection models and Hilbert data
strata   automorphism stabilizers, moduli strata dimensions, table verification
catalog  named example configurations used by the verification commands
cli      command-line front end
"""

from .wpoly import WeightedRing, WPoly

__all__ = ["WeightedRing", "WPoly"]
__version__ = "0.1.0"
