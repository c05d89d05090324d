"""
The exterior algebra of a Lie algebra's dual, with coefficients in QQ or in a
polynomial ring over QQ.

A form is a sparse map from strictly increasing 1-based index tuples to
nonzero coefficients. The Chevalley-Eilenberg differential is the Leibniz
extension of the structure equations, so parameters in polynomial
coefficients behave as constants under d.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial

from sympy.polys.domains import QQ

from . import linalg
from .exceptions import UsageError
from .scalarring import render_coefficient

logger = logging.getLogger(__name__)


# --- Index bookkeeping ---

@lru_cache(maxsize=None)
def monomial_basis(dim, degree):
    """
    All increasing index tuples of length ``degree`` in 1..dim, lex order.

    Degrees outside 0..dim have an empty basis.
    """
    if degree < 0 or degree > dim:
        return ()
    return tuple(combinations(range(1, dim + 1), degree))


@lru_cache(maxsize=None)
def basis_positions(dim, degree):
    return {indices: position for position, indices in enumerate(monomial_basis(dim, degree))}


def sort_sign(indices):
    """
    Sign of the permutation sorting ``indices`` and the sorted tuple.

    Returns:
        (0, None) when an index repeats, else (+1 or -1, sorted tuple).
    """
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = sum(
        1 for a in range(len(indices)) for b in range(a + 1, len(indices))
        if indices[a] > indices[b]
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


@lru_cache(maxsize=None)
def complement(dim, indices):
    """
    The complementary indices and the sign of e^I ∧ e^{I^c} against e^{1..dim}.
    """
    rest = tuple(i for i in range(1, dim + 1) if i not in indices)
    parity = sum(indices) - len(indices) * (len(indices) + 1) // 2
    return rest, (-1 if parity % 2 else 1)


# --- Forms ---

@dataclass(frozen=True, eq=False)
class Form:
    """
    A homogeneous form of degree ``degree`` on a ``dim``-dimensional algebra.

    Degrees outside 0..dim are allowed and always hold the zero form; they
    appear as intermediate results (d of a top form, d^Λ of a function).
    """
    dim: int
    degree: int
    coeffs: dict = field(default_factory=dict)
    domain: object = QQ

    def __post_init__(self):
        cleaned = {}
        for indices, value in self.coeffs.items():
            if len(indices) != self.degree:
                raise UsageError(
                    f"term e{indices} does not have degree {self.degree}"
                )
            if value:
                cleaned[tuple(indices)] = value
        object.__setattr__(self, 'coeffs', cleaned)

    # --- Constructors ---

    @classmethod
    def zero(cls, dim, degree, domain=QQ):
        return cls(dim, degree, {}, domain)

    @classmethod
    def one(cls, dim, domain=QQ):
        return cls(dim, 0, {(): domain.one}, domain)

    @classmethod
    def monomial(cls, dim, indices, coeff=None, domain=QQ):
        """Builds coeff·e^{indices}; the indices may be unsorted."""
        sign, ordered = sort_sign(tuple(indices))
        if not sign:
            return cls.zero(dim, len(indices), domain)
        value = domain.one if coeff is None else coeff
        return cls(dim, len(ordered), {ordered: value * sign}, domain)

    @classmethod
    def from_vector(cls, dim, degree, vector, domain=QQ):
        basis = monomial_basis(dim, degree)
        return cls(dim, degree, dict(zip(basis, vector)), domain)

    # --- Views ---

    def vector(self):
        """Coefficients in the lex monomial basis of this degree."""
        zero = self.domain.zero
        return [self.coeffs.get(indices, zero) for indices in monomial_basis(self.dim, self.degree)]

    @property
    def is_zero(self):
        return not self.coeffs

    def coefficient(self, indices):
        return self.coeffs.get(tuple(indices), self.domain.zero)

    # --- Arithmetic ---

    def _check_compatible(self, other):
        if self.dim != other.dim or self.degree != other.degree:
            raise UsageError(
                f"cannot combine a {self.degree}-form on dim {self.dim} "
                f"with a {other.degree}-form on dim {other.dim}"
            )

    def __add__(self, other):
        self._check_compatible(other)
        total = dict(self.coeffs)
        for indices, value in other.coeffs.items():
            total[indices] = total.get(indices, self.domain.zero) + value
        return Form(self.dim, self.degree, total, self.domain)

    def __neg__(self):
        return Form(self.dim, self.degree, {k: -v for k, v in self.coeffs.items()}, self.domain)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return Form(self.dim, self.degree, {k: v * factor for k, v in self.coeffs.items()}, self.domain)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def convert(self, domain):
        """Moves QQ coefficients into ``domain`` (a polynomial domain)."""
        if domain == self.domain:
            return self
        coeffs = {k: domain.convert_from(v, self.domain) for k, v in self.coeffs.items()}
        return Form(self.dim, self.degree, coeffs, domain)

    def specialize(self, values):
        """
        Evaluates polynomial coefficients at ``values`` (one QQ per ring variable).

        Returns:
            Form over QQ.
        """
        if self.domain == QQ:
            return self
        coeffs = {k: QQ.convert(v(*values)) for k, v in self.coeffs.items()}
        return Form(self.dim, self.degree, coeffs, QQ)

    def __str__(self):
        return render_form(self)

    def __repr__(self):
        return f'Form({self.degree}, {render_form(self)!r})'


# --- Products and the differential ---

def _common_domain(a, b):
    domain = a.domain if a.domain != QQ else b.domain
    return a.convert(domain), b.convert(domain), domain


def wedge(a, b):
    """Graded-anticommutative exterior product."""
    if a.dim != b.dim:
        raise UsageError("wedge of forms on algebras of different dimension")
    a, b, domain = _common_domain(a, b)
    result = {}
    for left, x in a.coeffs.items():
        for right, y in b.coeffs.items():
            sign, indices = sort_sign(left + right)
            if not sign:
                continue
            value = x * y if sign > 0 else -(x * y)
            result[indices] = result.get(indices, domain.zero) + value
    return Form(a.dim, a.degree + b.degree, result, domain)


def power(omega, exponent):
    result = Form.one(omega.dim, omega.domain)
    for _ in range(exponent):
        result = wedge(result, omega)
    return result


@lru_cache(maxsize=None)
def _monomial_differential(algebra, indices):
    """d(e^I) as a tuple of (index tuple, QQ) pairs, by the Leibniz rule."""
    if not indices:
        return ()
    head, rest = indices[0], indices[1:]
    total = {}
    # d(e^h ∧ rest) = de^h ∧ rest - e^h ∧ d(rest)
    for (i, j), coeff in algebra.generator_differential(head).items():
        sign, ordered = sort_sign((i, j) + rest)
        if sign:
            total[ordered] = total.get(ordered, QQ.zero) + coeff * sign
    for tail, coeff in _monomial_differential(algebra, rest):
        sign, ordered = sort_sign((head,) + tail)
        if sign:
            total[ordered] = total.get(ordered, QQ.zero) - coeff * sign
    return tuple((k, v) for k, v in sorted(total.items()) if v)


def differential(algebra, form):
    """The Chevalley-Eilenberg differential, linear over the coefficient ring."""
    if form.dim != algebra.dim:
        raise UsageError(
            f"form lives on dimension {form.dim}, algebra {algebra.name} has dimension {algebra.dim}"
        )
    result = {}
    zero = form.domain.zero
    for indices, value in form.coeffs.items():
        for image, coeff in _monomial_differential(algebra, indices):
            result[image] = result.get(image, zero) + value * coeff
    return Form(form.dim, form.degree + 1, result, form.domain)


def operator_matrix(operator, dim, source_degree, target_degree):
    """
    Matrix (as rows) of a linear operator on forms, columns indexed by the
    monomial basis of ``source_degree``.
    """
    columns = [
        operator(Form.monomial(dim, indices)).vector()
        for indices in monomial_basis(dim, source_degree)
    ]
    return linalg.columns_to_rows(columns, len(monomial_basis(dim, target_degree)))


# --- Pairings induced by a matrix on 1-forms ---

def omega_matrix(omega):
    """The antisymmetric matrix Ω with ω = Σ_{i<j} Ω_ij e^i ∧ e^j (0-based rows)."""
    if omega.degree != 2:
        raise UsageError(f"expected a 2-form, got degree {omega.degree}")
    zero = omega.domain.zero
    rows = [[zero] * omega.dim for _ in range(omega.dim)]
    for (i, j), value in omega.coeffs.items():
        rows[i - 1][j - 1] = value
        rows[j - 1][i - 1] = -value
    return rows


def inverse_pairing_matrix(omega):
    """
    ω⁻¹ on 1-forms: W = -Ω⁻¹, so that ω⁻¹(e¹, e²) = 1 for ω = e¹² + e³⁴.
    """
    inverse = linalg.inverse(omega_matrix(omega), omega.domain)
    return [[-entry for entry in row] for row in inverse]


def monomial_pairing(matrix, left, right, domain=QQ):
    """det(matrix[I, J]) with 1-based index tuples; 1 on 0-forms."""
    if len(left) != len(right):
        raise UsageError("pairing of forms of different degree")
    rows = [[matrix[i - 1][j - 1] for j in right] for i in left]
    return linalg.determinant(rows, domain)


def gram_pairing(matrix, a, b):
    """Bilinear extension of a 1-form pairing to k-forms by Gram determinants."""
    if a.degree != b.degree:
        raise UsageError(f"cannot pair a {a.degree}-form with a {b.degree}-form")
    a, b, domain = _common_domain(a, b)
    total = domain.zero
    for left, x in a.coeffs.items():
        for right, y in b.coeffs.items():
            entry = monomial_pairing(matrix, left, right, domain)
            if entry:
                total = total + x * y * entry
    return total


def omega_inv_pairing(structure, a, b):
    """ω⁻¹(a, b) for a symplectic structure (anything with ``inverse_matrix``)."""
    return gram_pairing(structure.inverse_matrix, a, b)


def pairing_star(matrix, top_coefficient, indices, dim, domain=QQ):
    """
    The star of e^J against a 1-form pairing and a volume form v·e^{1..dim}:
    the unique form with e^I ∧ *(e^J) = pairing(e^I, e^J)·v·e^{1..dim}.

    Returns:
        dict mapping complementary index tuples to coefficients.
    """
    image = {}
    for source in monomial_basis(dim, len(indices)):
        entry = monomial_pairing(matrix, source, indices, domain)
        if not entry:
            continue
        rest, sign = complement(dim, source)
        image[rest] = entry * top_coefficient * sign
    return image


# --- Volume ---

def volume_data(omega):
    """
    The top power of a 2-form.

    Returns:
        (ωⁿ/n!, coefficient of e^{1..2n} in ωⁿ), or None when that coefficient
        vanishes (identically, over a polynomial ring).
    """
    if omega.dim % 2:
        raise UsageError(f"volume of a 2-form needs even dimension, got {omega.dim}")
    n = omega.dim // 2
    top = power(omega, n)
    coefficient = top.coefficient(tuple(range(1, omega.dim + 1)))
    if not coefficient:
        return None
    volume = top.scale(QQ(1, factorial(n)))
    return volume, coefficient


# --- Rendering ---

def render_monomial(dim, indices):
    if not indices:
        return '1'
    if dim <= 9:
        return 'e' + ''.join(str(i) for i in indices)
    return 'e{' + ','.join(str(i) for i in indices) + '}'


def render_form(form):
    """
    Terms in lex order joined by " + " / " - ", e.g. ``e12 + 2*e34 - 1/3*e56``.
    """
    if form.is_zero:
        return '0'
    pieces = []
    for indices in sorted(form.coeffs):
        value = form.coeffs[indices]
        label = render_monomial(form.dim, indices)
        text = render_coefficient(value)
        multi_term = hasattr(value, 'ring') and len(value) > 1
        negative = not multi_term and text.startswith('-')
        if negative:
            text = text[1:]
        if multi_term:
            body = f'({text})' if not indices else f'({text})*{label}'
        elif not indices:
            body = text
        elif text == '1':
            body = label
        else:
            body = f'{text}*{label}'
        if not pieces:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f" {'-' if negative else '+'} {body}")
    return ''.join(pieces)
