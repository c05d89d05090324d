"""
Symplectic operator calculus on invariant forms.

Conventions:
  - ω⁻¹ on 1-forms is W = -Ω⁻¹ and extends to k-forms by Gram determinants.
  - *_s is defined by α ∧ *_s β = ω⁻¹(α, β) ωⁿ/n!, so *_s *_s = id.
  - Λ = ε *_s L *_s, with ε = ±1 fixed once per n by requiring H(1) = n
    on the standard symplectic vector space. Then H = [L, Λ] acts on Λ^k as
    (n - k), and d^Λ = (-1)^(k+1) *_s d *_s = dΛ - Λd.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from sympy.polys.domains import QQ

from . import linalg
from .cohomology import (
    ClassCoords, class_representative, cohomology_basis, differential_matrix, hlc_check,
    quotient_basis, require_closed,
)
from .exceptions import DegenerateFormError, InvariantViolation, UsageError
from .exterior import (
    Form, differential, inverse_pairing_matrix, monomial_basis, operator_matrix,
    pairing_star, render_form, volume_data, wedge,
)
from .liealgebra import LieAlgebraPresentation

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SymplecticStructure:
    algebra: LieAlgebraPresentation
    omega: Form
    # ω⁻¹ on 1-forms, 0-based rows.
    inverse_matrix: list
    # ωⁿ/n! and its single coefficient.
    volume: Form
    volume_coefficient: object
    n: int
    _star_images: dict = field(default_factory=dict, repr=False)
    _matrices: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_form(cls, algebra, omega):
        """
        Validates ω (degree 2, closed, nondegenerate, rational) and caches ω⁻¹
        and the volume form.
        """
        if omega.degree != 2:
            raise UsageError(f"a symplectic form has degree 2, got {omega.degree}")
        if omega.dim != algebra.dim:
            raise UsageError(f"form on dimension {omega.dim} does not fit {algebra.name}")
        if algebra.dim % 2:
            raise UsageError(f"{algebra.name} has odd dimension {algebra.dim}")
        if omega.domain != QQ:
            raise UsageError("symplectic structures need rational coefficients")
        require_closed(algebra, omega, 'symplectic form candidate')
        volume = volume_data(omega)
        if volume is None:
            raise DegenerateFormError(f"{render_form(omega)} is degenerate: ωⁿ = 0")
        volume_form, _ = volume
        return cls(
            algebra=algebra,
            omega=omega,
            inverse_matrix=inverse_pairing_matrix(omega),
            volume=volume_form,
            volume_coefficient=volume_form.coefficient(tuple(range(1, algebra.dim + 1))),
            n=algebra.dim // 2,
        )

    @property
    def dim(self):
        return self.algebra.dim

    # --- Symplectic star ---

    def star_monomial(self, indices):
        image = self._star_images.get(indices)
        if image is None:
            image = pairing_star(self.inverse_matrix, self.volume_coefficient, indices, self.dim)
            self._star_images[indices] = image
        return image

    def star(self, form):
        result = {}
        for indices, value in form.coeffs.items():
            for target, coeff in self.star_monomial(indices).items():
                result[target] = result.get(target, QQ.zero) + value * coeff
        return Form(self.dim, self.dim - form.degree, result)

    # --- Cached operator matrices ---

    def matrix(self, key, operator, source_degree, target_degree):
        cache_key = (key, source_degree)
        if cache_key not in self._matrices:
            self._matrices[cache_key] = operator_matrix(operator, self.dim, source_degree, target_degree)
            logger.debug("built %s on degree %d for %s", key, source_degree, self.algebra.name)
        return self._matrices[cache_key]


def symplectic_star(structure, form):
    return structure.star(form)


# --- sl(2) triple ---

@lru_cache(maxsize=None)
def lambda_sign(n):
    """
    ε in Λ = ε *L* so that H(1) = +n on the standard symplectic R^2n.
    """
    dim = 2 * n
    flat = LieAlgebraPresentation.from_mapping(f'r{dim}', dim, {})
    omega = Form(dim, 2, {(2 * i - 1, 2 * i): QQ.one for i in range(1, n + 1)})
    standard = SymplecticStructure.from_form(flat, omega)
    # With ε = 1: Λ(1) = 0, so H(1) = -Λ(ω) = -*(ω ∧ *ω).
    raw_lambda_omega = standard.star(wedge(omega, standard.star(omega)))
    value = -raw_lambda_omega.coefficient(())
    if value == n:
        return 1
    if value == -n:
        return -1
    raise InvariantViolation(f"H(1) = {value} on the standard R^{dim}; expected ±{n}")


@dataclass(frozen=True)
class OperatorTriple:
    """L = ω ∧ ·, Λ = ε *L*, H = [L, Λ] as maps on forms and per-degree matrices."""

    structure: SymplecticStructure
    sign: int

    def L(self, form):
        return wedge(self.structure.omega, form)

    def Lam(self, form):
        image = self.structure.star(self.L(self.structure.star(form)))
        return image.scale(self.sign) if self.sign != 1 else image

    def H(self, form):
        return self.L(self.Lam(form)) - self.Lam(self.L(form))

    def matrix(self, name, degree):
        shift = {'L': 2, 'Lam': -2, 'H': 0}[name]
        operator = getattr(self, name)
        return self.structure.matrix(name, operator, degree, degree + shift)


def sl2_operators(structure):
    return OperatorTriple(structure, lambda_sign(structure.n))


# --- d^Λ ---

def d_lambda(structure, form):
    """
    (-1)^(k+1) *_s d *_s, checked against dΛ - Λd.

    Returns:
        Form of degree k - 1.
    """
    algebra = structure.algebra
    star = structure.star
    k = form.degree
    first = star(differential(algebra, star(form)))
    if k % 2 == 0:
        first = -first
    triple = sl2_operators(structure)
    second = differential(algebra, triple.Lam(form)) - triple.Lam(differential(algebra, form))
    if first != second:
        raise InvariantViolation(
            f"d^Λ formulas disagree on {render_form(form)}: "
            f"{render_form(first)} vs {render_form(second)}"
        )
    return first


def d_lambda_matrix(structure, degree):
    """Rows of d^Λ: Λ^degree -> Λ^(degree-1)."""
    return structure.matrix('dlambda', lambda form: d_lambda(structure, form), degree, degree - 1)


def _length(structure, degree):
    return len(monomial_basis(structure.dim, degree))


def _columns(rows, ncols):
    return [[row[j] for row in rows] for j in range(ncols)]


def _dd_lambda(structure, degree):
    """Rows of d d^Λ on Λ^degree."""
    length = _length(structure, degree)
    return linalg.matmul(
        differential_matrix(structure.algebra, degree - 1),
        d_lambda_matrix(structure, degree),
        length,
    )


def _closed_and_exact_dimension(structure, degree):
    """dim(ker d^Λ ∩ Im d) on Λ^degree, with the spanning vectors."""
    lower = _length(structure, degree - 1)
    d_rows = differential_matrix(structure.algebra, degree - 1)
    composite = linalg.matmul(d_lambda_matrix(structure, degree), d_rows, lower)
    preimages = linalg.kernel_basis(composite, lower) if lower else []
    vectors = [linalg.apply(d_rows, x, QQ.zero) for x in preimages]
    length = _length(structure, degree)
    return linalg.column_rank(vectors, length), vectors


# --- Harmonic representatives ---

def harmonic_representative(structure, coords):
    """
    A form a + dη in the class ``coords`` with d^Λ(a + dη) = 0, or None.

    Solves d^Λ d η = -d^Λ a with free variables set to zero, so the answer
    is deterministic.
    """
    k = coords.degree
    basis = cohomology_basis(structure.algebra, k)
    rep = class_representative(basis, coords)
    lower = _length(structure, k - 1)
    d_rows = differential_matrix(structure.algebra, k - 1)
    dl_rows = d_lambda_matrix(structure, k)
    system = linalg.matmul(dl_rows, d_rows, lower)
    rhs = [-value for value in linalg.apply(dl_rows, rep.vector(), QQ.zero)]
    solution = linalg.solve(system, lower, rhs)
    if solution is None:
        return None
    eta = Form.from_vector(structure.dim, k - 1, solution)
    return rep + differential(structure.algebra, eta)


def all_classes_harmonic(structure):
    """True when every basis class in every degree has a harmonic representative."""
    for k in range(structure.dim + 1):
        basis = cohomology_basis(structure.algebra, k)
        for i in range(basis.dimension):
            unit = tuple(QQ.one if j == i else QQ.zero for j in range(basis.dimension))
            if harmonic_representative(structure, ClassCoords(k, unit)) is None:
                logger.info("%s: class %d of H^%d has no harmonic representative", structure.algebra.name, i, k)
                return False
    return True


# --- Brylinski and Tseng-Yau groups ---

@dataclass(frozen=True)
class QuotientGroup:
    degree: int
    dimension: int
    representatives: tuple


def brylinski_cohomology(structure, degree):
    """ker d^Λ / Im d^Λ on Λ^degree."""
    length = _length(structure, degree)
    image_columns = _columns(d_lambda_matrix(structure, degree + 1), _length(structure, degree + 1))
    chosen, _ = quotient_basis(d_lambda_matrix(structure, degree), image_columns, length)
    representatives = tuple(Form.from_vector(structure.dim, degree, v) for v in chosen)
    return QuotientGroup(degree, len(representatives), representatives)


@dataclass(frozen=True)
class TsengYauReport:
    degree: int
    dim_bott_chern: int
    dim_aeppli: int
    map_to_dR_injective: bool
    bc_to_aeppli_iso: bool


def tseng_yau_cohomology(structure, degree):
    """
    Bott-Chern (ker d ∩ ker d^Λ) / Im dd^Λ and Aeppli ker dd^Λ / (Im d + Im d^Λ).

    Also decides injectivity of Bott-Chern -> de Rham and whether the natural
    Bott-Chern -> Aeppli map is an isomorphism, by exact ranks.
    """
    length = _length(structure, degree)
    algebra = structure.algebra
    d_rows = differential_matrix(algebra, degree)
    dl_rows = d_lambda_matrix(structure, degree)
    bc_kernel = linalg.kernel_basis(d_rows + dl_rows, length)

    dd_rows = _dd_lambda(structure, degree)
    rank_dd = linalg.rank(dd_rows, length)
    dim_bc = len(bc_kernel) - rank_dd

    aeppli_span = (
        _columns(differential_matrix(algebra, degree - 1), _length(structure, degree - 1))
        + _columns(d_lambda_matrix(structure, degree + 1), _length(structure, degree + 1))
    )
    rank_aeppli_span = linalg.column_rank(aeppli_span, length)
    dim_aeppli = (length - rank_dd) - rank_aeppli_span

    closed_exact, _ = _closed_and_exact_dimension(structure, degree)
    injective = closed_exact == rank_dd

    induced_rank = linalg.column_rank(bc_kernel + aeppli_span, length) - rank_aeppli_span
    iso = induced_rank == dim_bc == dim_aeppli
    return TsengYauReport(degree, dim_bc, dim_aeppli, injective, iso)


def ddlambda_lemma_check(structure, degree):
    """ker d^Λ ∩ Im d = Im dd^Λ on Λ^degree."""
    length = _length(structure, degree)
    dimension, vectors = _closed_and_exact_dimension(structure, degree)
    dd_columns = _columns(_dd_lambda(structure, degree), length)
    rank_dd = linalg.column_rank(dd_columns, length)
    if linalg.column_rank(vectors + dd_columns, length) != dimension:
        raise InvariantViolation(
            f"Im dd^Λ is not inside ker d^Λ ∩ Im d in degree {degree} for {structure.algebra.name}"
        )
    return dimension == rank_dd


# --- Equivalence audit ---

@dataclass(frozen=True)
class AuditReport:
    algebra: str
    omega: str
    i_hlc: bool
    ii_harmonic: bool
    iii_ddlambda: bool
    iv_bc_injective: bool
    v_bc_aeppli_iso: bool

    @property
    def values(self):
        return (self.i_hlc, self.ii_harmonic, self.iii_ddlambda, self.iv_bc_injective, self.v_bc_aeppli_iso)

    @property
    def consistent(self):
        return len(set(self.values)) == 1

    def to_dict(self):
        return {
            'algebra': self.algebra,
            'omega': self.omega,
            'i_hlc': self.i_hlc,
            'ii_harmonic': self.ii_harmonic,
            'iii_ddlambda': self.iii_ddlambda,
            'iv_bc_injective': self.iv_bc_injective,
            'v_bc_aeppli_iso': self.v_bc_aeppli_iso,
            'consistent': self.consistent,
        }


def equivalence_audit(structure):
    """
    Evaluates the five conditions that are equivalent on compact symplectic
    manifolds: HLC, harmonic representatives, dd^Λ-lemma, Bott-Chern -> de Rham
    injective, Bott-Chern -> Aeppli isomorphism.
    """
    degrees = range(structure.dim + 1)
    tseng_yau = [tseng_yau_cohomology(structure, k) for k in degrees]
    report = AuditReport(
        algebra=structure.algebra.name,
        omega=render_form(structure.omega),
        i_hlc=hlc_check(structure.algebra, structure).verdict,
        ii_harmonic=all_classes_harmonic(structure),
        iii_ddlambda=all(ddlambda_lemma_check(structure, k) for k in degrees),
        iv_bc_injective=all(entry.map_to_dR_injective for entry in tseng_yau),
        v_bc_aeppli_iso=all(entry.bc_to_aeppli_iso for entry in tseng_yau),
    )
    if not report.consistent:
        logger.warning("audit of %s at %s is inconsistent: %s", report.algebra, report.omega, report.values)
    else:
        logger.info("audit of %s at %s: all %s", report.algebra, report.omega, report.i_hlc)
    return report
