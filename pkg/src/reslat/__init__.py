"""Finite commutative integral residuated lattices.

Filters, quotients, morphisms, the Boolean center and its lifting
property, direct products with CRT, and the decomposition of an algebra
with lifting Boolean center into local factors.
"""

from .algebra import (INF, Algebra, LatticeError, StructureError, VerificationReport, biimpl,
                      classify_element, covers_of, leq, neg, order_of, power, powers,
                      subalgebra_generated, verify_axioms)
from .boolean_center import (BooleanCenter, LiftingResult, NotComplementedError, RelativeAlgebra,
                             boolean_center, has_lifting, lift_idempotent, rad_quotient,
                             relative_algebra)
from .enumeration import Catalog, OrderCapError, canonical_key, enumerate_algebras, enumerate_slow
from .filters import (FilterSet, NotAFilterError, all_filters, as_filter, dense_filter,
                      generated_filter, infinite_order_set, is_filter, is_local, is_prime,
                      max_filters, principal_filter, radical, spec, unities)
from .fixtures import FIXTURES, fixture
from .io import ParseError, dump, dumps, load, loads
from .laws import LawResult, check_laws
from .morphisms import Morphism, MorphismError, find_isomorphism, is_morphism, isomorphic
from .products import (Classification, CoMaximalityError, NoLiftingError, ProductAlgebra,
                       SizeCapError, classify, crt_solve, decompose, direct_product,
                       semilocal_decompose, spec_max_of_product)
from .quotients import QuotientError, QuotientResult, quotient

__version__ = "0.1.0"
