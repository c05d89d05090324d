"""
Exact scalars and multivariate polynomials.

Scalars are elements of sympy's ``QQ`` domain (always in lowest terms, with a
positive denominator). Polynomials are ``PolyElement`` values of a
``PolyRing`` over ``QQ`` in graded lexicographic order; the ring is shared by
every polynomial built from the same parameter names.
"""
import logging
import re
from functools import lru_cache

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing

from .exceptions import ScalarFormatError, UsageError

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


# --- Scalars ---

def parse_scalar(text):
    """
    Parses an integer or ``p/q`` string into a ``QQ`` element.

    Returns:
        QQ element in lowest terms.
    """
    if isinstance(text, int):
        return QQ(text)
    match = _RATIONAL.match(str(text))
    if not match:
        raise ScalarFormatError(f"malformed rational {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ScalarFormatError(f"zero denominator in {text!r}")
    return QQ(int(numerator), int(denominator or 1))


def render_scalar(value):
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


# --- Polynomial rings ---

@lru_cache(maxsize=None)
def polynomial_ring(names):
    """
    Returns the ``PolyRing`` over ``QQ`` in graded lex order on ``names``.

    ``names`` is a tuple of variable names; equal tuples give the same ring.
    """
    if not names:
        raise UsageError("a polynomial ring needs at least one variable")
    return PolyRing(tuple(names), QQ, grlex)


def variable_names(p):
    return tuple(str(symbol) for symbol in p.ring.symbols)


def _check_same_ring(p, q):
    if variable_names(p) != variable_names(q):
        raise UsageError(
            f"mismatched variable lists {variable_names(p)} and {variable_names(q)}"
        )


def poly_gcd(p, q):
    """
    Greatest common divisor normalized to leading coefficient 1.

    gcd(p, 0) is p made monic; gcd(0, 0) is 0.
    """
    _check_same_ring(p, q)
    if not q:
        return p.monic()
    if not p:
        return q.monic()
    return p.gcd(q).monic()


def poly_divides(p, q):
    """
    Returns q / p when p divides q exactly, otherwise None.
    """
    _check_same_ring(p, q)
    if not p:
        raise UsageError("division by the zero polynomial")
    try:
        return q.exquo(p)
    except ExactQuotientFailed:
        return None


def poly_proportional(p, q):
    """
    Returns the rational r with q = r*p, or None when no nonzero r exists.

    Two zero polynomials are proportional with ratio 1.
    """
    _check_same_ring(p, q)
    if not p and not q:
        return QQ.one
    if not p or not q:
        return None
    ratio = q.LC / p.LC
    if p.mul_ground(ratio) == q:
        return ratio
    return None


def poly_eval(p, point):
    """
    Evaluates p exactly at ``point``, a mapping from variable name to scalar.

    Returns:
        QQ element.
    """
    names = variable_names(p)
    missing = [name for name in names if name not in point]
    if missing:
        raise UsageError(f"no value given for {', '.join(missing)}")
    values = [QQ.convert(point[name]) for name in names]
    if not p:
        return QQ.zero
    return QQ.convert(p(*values))


def factors_within(p, q):
    """
    True when every factor of p also divides q, checked by stripping
    gcd(p, q) from p until nothing common is left.

    Geometrically: the zero set of p lies inside the zero set of q.
    """
    _check_same_ring(p, q)
    if not p:
        return not q
    remainder = p
    while True:
        common = poly_gcd(remainder, q)
        if common.is_ground:
            break
        remainder = remainder.exquo(common)
    return remainder.is_ground


def render_poly(p):
    """
    Renders terms in graded lex order, e.g. ``6*c1*c2*c3 + 6*c1*c4*c5``.
    """
    if not p:
        return '0'
    names = variable_names(p)
    pieces = []
    for exponents, coeff in p.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        factors = []
        for name, exponent in zip(names, exponents):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f'{name}**{exponent}')
        if not factors:
            body = render_scalar(magnitude)
        elif magnitude == 1:
            body = '*'.join(factors)
        else:
            body = '*'.join([render_scalar(magnitude)] + factors)
        if not pieces:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f" {'-' if negative else '+'} {body}")
    return ''.join(pieces)


def render_coefficient(value):
    """Renders either a scalar or a polynomial coefficient."""
    if hasattr(value, 'ring'):
        return render_poly(value)
    return render_scalar(value)

