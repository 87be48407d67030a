"""Gabriel-Roiter measures on the wild n-Kronecker quiver.

Symbolic layer: :mod:`grorder` (the measure order), :mod:`dimvec` (dimension
vectors and the Coxeter transformation), :mod:`grsym` (closed-form measures of
the take-off chain and the (1,c) families) and :mod:`fib3` (n = 3 through
Fibonacci numbers).  :mod:`repkit` computes measures from explicit matrices
over F_p and is used to check the symbolic layer.
"""

from .dimvec import DimVec, KroneckerContext
from .grorder import GrMeasure, compare, extend, max_of, measure, starts_with

__version__ = "0.1.0"

__all__ = ["DimVec", "GrMeasure", "KroneckerContext", "compare", "extend", "max_of", "measure", "starts_with"]
