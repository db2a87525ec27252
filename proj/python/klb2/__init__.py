"""Kazhdan-Lusztig basis engine for the affine Weyl group of type B2.

Elements are passed as words over the digits 0, 1, 2 (generators s0, s1, s2);
the empty string is the identity.  Polynomials are dicts mapping exponents of
v to integer coefficients, and Hecke algebra elements are dicts mapping
canonical words to polynomials.
"""

from ._klb2 import (
    Engine,
    FormulaError,
    ball,
    big_element,
    bruhat_leq,
    canonical,
    classify,
    coatom_formula,
    coatoms,
    descents,
    f_poly,
    family_element,
    h_xbar_x_closed,
    interval_size_formula,
    inverse,
    length,
    lower_interval,
    n_elem,
    phi,
    suite_names,
    tessellate,
    theta,
)

_default = None


def _engine():
    global _default
    if _default is None:
        _default = Engine()
    return _default


def kl_basis(w):
    return _engine().kl_basis(w)


def h_poly(x, w):
    return _engine().h_poly(x, w)


def mu(x, w):
    return _engine().mu(x, w)


def kl_closed(w):
    """Closed-formula KL basis element, with the route and formula that served it."""
    return _engine().kl_closed(w)


def verify(suite, max_len=0):
    """Run a verification suite; max_len 0 selects the suite default."""
    return _engine().verify(suite, max_len)


def thin_conjecture(k):
    return _engine().thin_conjecture(k)


__all__ = [name for name in dir() if not name.startswith("_")]
