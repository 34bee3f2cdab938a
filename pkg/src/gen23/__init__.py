"""gen23: verification toolkit for explicit (2,3)-generator constructions of
3- and 5-dimensional special linear and unitary groups over finite fields.

Subpackage map:

* ``numth``          exact integer number theory (phi bounds, factorization)
* ``fields``         GF(p^m) arithmetic, Frobenius, subfields, roots of unity
* ``polys``          polynomials over Z and GF(q): resultants, factorization
* ``matgroup``       matrices as group elements: orders, invariant factors
* ``repcheck``       irreducibility (MeatAxe + brute oracle), invariant forms
* ``constructions``  the explicit generator pairs, their condition systems,
                     scalar-power classification, parameter searches
* ``engine``         exact group-order computation by closure enumeration
* ``certify``        generation / non-generation certificates
* ``claims``         registry mapping each verifiable claim to a runnable check
* ``cli``            command-line front end (verify / search / closure)
"""

from .fields import (  # noqa: F401
    Field,
    FieldElement,
    SubfieldDescriptor,
    element,
    element_order,
    frobenius,
    make_field,
    parse_field,
    subfield_generated,
)
from .numth import check_phi_bounds, euler_phi  # noqa: F401
from .reports import ClaimReport, ConditionReport  # noqa: F401

__version__ = "0.1.0"
