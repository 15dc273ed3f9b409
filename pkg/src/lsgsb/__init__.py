"""lsgsb: exact symbolic kernel for Lyndon-Shirshov bracketed words and
Groebner-Shirshov bases in free operated Lie and associative algebras.

Public surface:

* ``words``   -- bracketed words, star words, trees, parsing/printing
* ``lyndon``  -- LS word tests, Shirshov bracketing, enumeration, Witt counts
* ``orders``  -- the dl/dt invariant monomial orders and property checks
* ``poly``    -- exact polynomials (associative and Lie), straightening
* ``rewrite`` -- operator-identity rewriting systems and normal forms
* ``gsb``     -- composition enumeration and bounded Groebner-Shirshov checks
* ``opi``     -- operator-identity families, classification, the catalog
* ``cli``     -- the ``lsgsb`` command line

All coefficients are exact ``fractions.Fraction`` values; no floating
point arithmetic occurs anywhere in the kernel.
"""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
