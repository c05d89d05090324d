"""
Almost-Kähler data on invariant forms: J acting on the coframe, the metric
g(u, v) = ω(u, Jv), the metric Hodge theory it induces, the J-invariant and
J-anti-invariant parts of H², and the Lejmi operator P_J.
"""
import logging
from dataclasses import dataclass, field

from sympy import integer_nthroot
from sympy.polys.domains import QQ

from . import linalg
from .cohomology import cohomology_basis, differential_matrix, quotient_basis
from .exceptions import NotAlmostComplexError, PreconditionError, UnsupportedMetricError, UsageError
from .exterior import (
    Form, differential, gram_pairing, monomial_basis, omega_matrix, operator_matrix,
    pairing_star, power, render_form, wedge,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlmostComplexStructure:
    """
    J on the coframe: J e^i = Σ_k j_matrix[k][i] e^k (0-based rows and columns).
    """
    dim: int
    j_matrix: tuple

    def __post_init__(self):
        square = linalg.matmul([list(r) for r in self.j_matrix], [list(r) for r in self.j_matrix], self.dim)
        for i, row in enumerate(square):
            for k, entry in enumerate(row):
                if entry != (QQ(-1) if i == k else QQ.zero):
                    raise NotAlmostComplexError("J does not square to -1")

    @classmethod
    def from_pairs(cls, dim, pairs):
        """
        J e^a = -e^b and J e^b = e^a for each pair (a, b); the pairs must
        cover every index once.
        """
        seen = [index for pair in pairs for index in pair]
        if sorted(seen) != list(range(1, dim + 1)):
            raise UsageError(f"J pairs {list(pairs)} must cover 1..{dim} exactly once")
        rows = [[QQ.zero] * dim for _ in range(dim)]
        for a, b in pairs:
            rows[b - 1][a - 1] = QQ(-1)
            rows[a - 1][b - 1] = QQ.one
        return cls(dim, tuple(tuple(row) for row in rows))

    def negated(self):
        return AlmostComplexStructure(self.dim, tuple(tuple(-x for x in row) for row in self.j_matrix))

    def image(self, index):
        """J e^index as a 1-form."""
        column = {(k + 1,): self.j_matrix[k][index - 1] for k in range(self.dim)}
        return Form(self.dim, 1, column)

    def act(self, form):
        """The multiplicative extension of J to forms of any degree."""
        total = Form.zero(self.dim, form.degree, form.domain)
        for indices, value in form.coeffs.items():
            product = Form.one(self.dim)
            for i in indices:
                product = wedge(product, self.image(i))
            total = total + product.convert(form.domain).scale(value)
        return total


def j_two_form_action(structure, form):
    if form.degree != 2:
        raise UsageError(f"J acts on 2-forms here, got degree {form.degree}")
    return structure.act(form)


# --- Compatible metrics ---

def _rational_sqrt(value):
    if value < 0:
        return None
    numerator, exact_n = integer_nthroot(int(value.numerator), 2)
    denominator, exact_d = integer_nthroot(int(value.denominator), 2)
    if not (exact_n and exact_d):
        return None
    return QQ(int(numerator), int(denominator))


@dataclass(eq=False)
class CompatibleTriple:
    J: AlmostComplexStructure
    symplectic: object
    g_matrix: list
    _inverse_metric: list = field(default=None, repr=False)
    _root_det: object = field(default=None, repr=False)
    _stars: dict = field(default_factory=dict, repr=False)

    @property
    def algebra(self):
        return self.symplectic.algebra

    @property
    def dim(self):
        return self.symplectic.dim

    @property
    def inverse_metric(self):
        if self._inverse_metric is None:
            self._inverse_metric = linalg.inverse(self.g_matrix)
        return self._inverse_metric

    @property
    def root_det(self):
        """√det g, which must be rational."""
        if self._root_det is None:
            root = _rational_sqrt(linalg.determinant(self.g_matrix))
            if root is None:
                raise UnsupportedMetricError("det g is not the square of a rational")
            self._root_det = root
        return self._root_det

    def inner(self, a, b):
        return gram_pairing(self.inverse_metric, a, b)

    def hodge_star(self, form):
        result = {}
        for indices, value in form.coeffs.items():
            image = self._stars.get(indices)
            if image is None:
                image = pairing_star(self.inverse_metric, self.root_det, indices, self.dim)
                self._stars[indices] = image
            for target, coeff in image.items():
                result[target] = result.get(target, QQ.zero) + value * coeff
        return Form(self.dim, self.dim - form.degree, result)

    def codifferential(self, form):
        # δ = -*d* in even dimension.
        return -self.hodge_star(differential(self.algebra, self.hodge_star(form)))


def compatibility_check(J, symplectic):
    """
    The triple (J, ω, g) when ω is J-invariant and g = ω(·, J·) is positive
    definite, else None.
    """
    omega = symplectic.omega
    if J.dim != omega.dim:
        raise UsageError(f"J acts on dimension {J.dim}, ω lives on {omega.dim}")
    if J.act(omega) != omega:
        logger.info("ω is not J-invariant")
        return None
    big_omega = omega_matrix(omega)
    size = J.dim
    g = [
        [sum((big_omega[a][i] * J.j_matrix[b][i] for i in range(size)), QQ.zero) for b in range(size)]
        for a in range(size)
    ]
    if any(g[a][b] != g[b][a] for a in range(size) for b in range(size)):
        logger.info("g = ω(·, J·) is not symmetric")
        return None
    for k in range(1, size + 1):
        if linalg.determinant([row[:k] for row in g[:k]]) <= 0:
            logger.info("g = ω(·, J·) fails positivity at minor %d", k)
            return None
    return CompatibleTriple(J=J, symplectic=symplectic, g_matrix=g)


def hodge_laplacian(triple, form):
    """Δ = dδ + δd for the metric of ``triple``."""
    algebra = triple.algebra
    if algebra.is_abelian:
        return Form.zero(triple.dim, form.degree, form.domain)
    d = differential(algebra, form)
    return differential(algebra, triple.codifferential(form)) + triple.codifferential(d)


# --- J-invariant cohomology ---

@dataclass(frozen=True)
class ClassGroup:
    dimension: int
    representatives: tuple


def _two_form_rows(dim, operator):
    return operator_matrix(operator, dim, 2, 2)


def _class_group(algebra, constraint_rows):
    """Image in H² of the closed 2-forms satisfying ``constraint_rows``."""
    dim = algebra.dim
    length = len(monomial_basis(dim, 2))
    closed = differential_matrix(algebra, 2)
    exact_rows = differential_matrix(algebra, 1)
    exact = [[row[j] for row in exact_rows] for j in range(len(monomial_basis(dim, 1)))]
    chosen, image = quotient_basis(closed + constraint_rows, exact, length)
    forms = tuple(Form.from_vector(dim, 2, v) for v in chosen)
    return ClassGroup(len(forms), forms), chosen, image


def _j_rows(J, sign):
    """Rows of J - sign·id on Λ²."""
    rows = _two_form_rows(J.dim, J.act)
    for position in range(len(rows)):
        rows[position][position] -= sign
    return rows


def j_eigenspace(J, sign):
    """Basis of the 2-forms with Jα = sign·α."""
    length = len(monomial_basis(J.dim, 2))
    return tuple(Form.from_vector(J.dim, 2, v) for v in linalg.kernel_basis(_j_rows(J, sign), length))


@dataclass(frozen=True)
class JCohomology:
    h_plus: ClassGroup
    h_minus: ClassGroup
    pure_and_full: bool


def j_invariant_cohomology(algebra, J, symplectic=None):
    """
    H⁺_J and H⁻_J: classes of closed J-invariant and J-anti-invariant 2-forms,
    and whether H² is their direct sum.

    The groups depend on J alone; when ``symplectic`` is given, J must also be
    compatible with it.
    """
    if symplectic is not None and compatibility_check(J, symplectic) is None:
        raise PreconditionError(f"J is not compatible with {render_form(symplectic.omega)}")
    plus, plus_vectors, exact = _class_group(algebra, _j_rows(J, 1))
    minus, minus_vectors, _ = _class_group(algebra, _j_rows(J, -1))
    length = len(monomial_basis(algebra.dim, 2))
    combined = linalg.column_rank(exact + plus_vectors + minus_vectors, length) - len(exact)
    direct = combined == plus.dimension + minus.dimension
    full = combined == cohomology_basis(algebra, 2).dimension
    logger.info(
        "%s: h+ = %d, h- = %d, direct = %s, full = %s",
        algebra.name, plus.dimension, minus.dimension, direct, full,
    )
    return JCohomology(plus, minus, direct and full)


def _primitive_rows(symplectic):
    n = symplectic.n
    lefschetz = power(symplectic.omega, n - 1)
    return operator_matrix(lambda form: wedge(lefschetz, form), symplectic.dim, 2, 2 * n)


def primitive_j_cohomology(algebra, J, symplectic):
    """H⁺_{J,0}: classes of closed, J-invariant, primitive 2-forms."""
    group, _, _ = _class_group(algebra, _j_rows(J, 1) + _primitive_rows(symplectic))
    return group


def primitive_two_forms(symplectic):
    """Basis of the 2-forms ψ with ω^{n-1}∧ψ = 0."""
    length = len(monomial_basis(symplectic.dim, 2))
    return tuple(
        Form.from_vector(symplectic.dim, 2, vector)
        for vector in linalg.kernel_basis(_primitive_rows(symplectic), length)
    )


def lejmi_operator(triple, psi):
    """P_J(ψ) = Δψ - (1/n) g(Δψ, ω) ω."""
    omega = triple.symplectic.omega
    laplacian = hodge_laplacian(triple, psi)
    weight = triple.inner(laplacian, omega) * QQ(1, triple.symplectic.n)
    return laplacian - omega.scale(weight)


def lejmi_kernel(triple):
    """
    Kernel of P_J on primitive invariant 2-forms.

    Returns:
        ClassGroup whose representatives are kernel forms (not classes).
    """
    dim = triple.dim
    length = len(monomial_basis(dim, 2))
    primitive = primitive_two_forms(triple.symplectic)
    images = [lejmi_operator(triple, psi).vector() for psi in primitive]
    rows = linalg.columns_to_rows(images, length)
    kernel = linalg.kernel_basis(rows, len(primitive))
    forms = []
    for coefficients in kernel:
        total = Form.zero(dim, 2)
        for value, psi in zip(coefficients, primitive):
            if value:
                total = total + psi.scale(value)
        forms.append(total)
    return ClassGroup(len(forms), tuple(forms))


@dataclass(frozen=True)
class AlmostKaehlerReport:
    algebra: str
    h_plus: int
    h_minus: int
    h_plus_primitive: int
    ker_pj: int
    pure_and_full: bool

    def to_dict(self):
        return {
            'algebra': self.algebra,
            'h_plus': self.h_plus,
            'h_minus': self.h_minus,
            'h_plus_primitive': self.h_plus_primitive,
            'ker_PJ': self.ker_pj,
            'pure_and_full': self.pure_and_full,
        }


def almost_kaehler_report(triple):
    algebra = triple.algebra
    groups = j_invariant_cohomology(algebra, triple.J, triple.symplectic)
    return AlmostKaehlerReport(
        algebra=algebra.name,
        h_plus=groups.h_plus.dimension,
        h_minus=groups.h_minus.dimension,
        h_plus_primitive=primitive_j_cohomology(algebra, triple.J, triple.symplectic).dimension,
        ker_pj=lejmi_kernel(triple).dimension,
        pure_and_full=groups.pure_and_full,
    )
