"""
Chevalley-Eilenberg cohomology over QQ.

For each degree the basis keeps its cocycle representatives together with a
left inverse of [representatives | basis of exact forms]. Applying the first
b_k rows of that left inverse to a closed form gives its class coordinates;
this works unchanged for forms with polynomial coefficients, since the
projector itself is rational.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy.polys.domains import QQ

from . import linalg
from .exceptions import DegenerateFormError, InvariantViolation, NotClosedError, UsageError
from .exterior import (
    Form, differential, monomial_basis, operator_matrix, power, render_form,
    volume_data, wedge,
)

logger = logging.getLogger(__name__)


# --- Choosing representatives of a quotient ---

def quotient_basis(constraint_rows, image_columns, length):
    """
    Representatives of (ker(constraint_rows) + span(image_columns)) modulo
    span(image_columns). When the image lies inside the kernel this is the
    usual quotient ker / image. Candidates are tried in a fixed
    order: single monomials in the kernel (lex order) first, then the
    canonical kernel basis. A candidate is kept when it raises the rank of
    the image plus the representatives already kept.

    Returns:
        (list of representative vectors, list of independent image vectors)
    """
    kernel = linalg.kernel_basis(constraint_rows, length)
    image = [image_columns[i] for i in linalg.independent_columns(image_columns, length)]
    target = linalg.column_rank(kernel + image, length) - len(image)
    chosen = []
    if target <= 0:
        return chosen, image

    candidates = []
    for position in range(length):
        unit = [QQ.zero] * length
        unit[position] = QQ.one
        if all(not row[position] for row in constraint_rows):
            candidates.append(unit)
    candidates.extend(kernel)

    current = len(image)
    for candidate in candidates:
        rank = linalg.column_rank(image + chosen + [candidate], length)
        if rank > current:
            chosen.append(candidate)
            current = rank
            if len(chosen) == target:
                break
    if len(chosen) != target:
        raise InvariantViolation(f"found {len(chosen)} of {target} representatives")
    return chosen, image


# --- Bases and coordinates ---

@dataclass(frozen=True, eq=False)
class CohomologyBasis:
    algebra: object
    degree: int
    representatives: tuple
    exact_basis: tuple
    # First b_k rows of the left inverse of [representatives | exact_basis].
    projector: tuple

    @property
    def dimension(self):
        return len(self.representatives)

    def coordinates(self, form):
        return linalg.apply(self.projector, form.vector(), form.domain.zero)


@dataclass(frozen=True)
class ClassCoords:
    degree: int
    coords: tuple

    def __len__(self):
        return len(self.coords)


@lru_cache(maxsize=None)
def differential_matrix(algebra, degree):
    """Rows of d: Λ^degree -> Λ^(degree+1) in the lex monomial bases."""
    return operator_matrix(
        lambda form: differential(algebra, form), algebra.dim, degree, degree + 1,
    )


def _columns(rows, ncols):
    return [[row[j] for row in rows] for j in range(ncols)]


@lru_cache(maxsize=None)
def cohomology_basis(algebra, degree):
    """
    Representatives of H^degree and the data to coordinate closed forms.

    Returns:
        CohomologyBasis
    """
    dim = algebra.dim
    length = len(monomial_basis(dim, degree))
    closed_rows = differential_matrix(algebra, degree)
    exact_columns = _columns(differential_matrix(algebra, degree - 1), len(monomial_basis(dim, degree - 1)))
    chosen, exact = quotient_basis(closed_rows, exact_columns, length)

    projector = linalg.left_inverse(chosen + exact, length)[:len(chosen)]
    representatives = tuple(Form.from_vector(dim, degree, vector) for vector in chosen)
    logger.debug(
        "H^%d(%s): %d representatives, %d exact directions: %s",
        degree, algebra.name, len(chosen), len(exact),
        ', '.join(render_form(rep) for rep in representatives),
    )
    return CohomologyBasis(
        algebra=algebra,
        degree=degree,
        representatives=representatives,
        exact_basis=tuple(tuple(vector) for vector in exact),
        projector=tuple(tuple(row) for row in projector),
    )


def betti(algebra, degree):
    return cohomology_basis(algebra, degree).dimension


def betti_numbers(algebra):
    return tuple(betti(algebra, k) for k in range(algebra.dim + 1))


def require_closed(algebra, form, what='form'):
    image = differential(algebra, form)
    if not image.is_zero:
        raise NotClosedError(
            f"{what} {render_form(form)} is not closed: d = {render_form(image)}",
            differential=image,
        )


def class_coordinates(basis, form):
    """
    Coordinates of [form] in the representatives of ``basis``.

    Returns:
        ClassCoords with entries in the form's coefficient domain.
    """
    if form.degree != basis.degree:
        raise UsageError(f"expected a {basis.degree}-form, got degree {form.degree}")
    require_closed(basis.algebra, form)
    return ClassCoords(basis.degree, tuple(basis.coordinates(form)))


def class_representative(basis, coords):
    """Σ coords_i · rep_i as a form."""
    total = Form.zero(basis.algebra.dim, basis.degree)
    for value, rep in zip(coords.coords, basis.representatives):
        if value:
            total = total + rep.scale(value)
    return total


def cup_product(algebra, a, b):
    """Class coordinates of [a ∧ b]."""
    require_closed(algebra, a)
    require_closed(algebra, b)
    basis = cohomology_basis(algebra, a.degree + b.degree)
    return class_coordinates(basis, wedge(a, b))


# --- Lefschetz maps ---

@dataclass(frozen=True)
class LefschetzMatrix:
    """Matrix of [α] ↦ [α ∧ ω^k]: H^(n-k) -> H^(n+k), columns indexed by the source."""

    k: int
    rows: tuple
    source_dimension: int
    target_dimension: int
    domain: object = QQ

    @property
    def is_square(self):
        return self.source_dimension == self.target_dimension

    def rank(self):
        return linalg.rank([list(row) for row in self.rows], self.source_dimension)

    def determinant(self):
        return linalg.determinant([list(row) for row in self.rows], self.domain)

    def specialize(self, values):
        if self.domain == QQ:
            return self.rows
        return tuple(tuple(QQ.convert(entry(*values)) if entry else QQ.zero for entry in row) for row in self.rows)


def wedge_class_rows(algebra, form, degree):
    """
    Matrix of [α] ↦ [α ∧ form]: H^degree -> H^(degree + deg form) for a closed
    ``form``, as rows over the form's coefficient domain.

    Returns:
        (rows, source dimension, target dimension)
    """
    source = cohomology_basis(algebra, degree)
    target = cohomology_basis(algebra, degree + form.degree)
    columns = [target.coordinates(wedge(rep, form)) for rep in source.representatives]
    rows = tuple(
        tuple(column[i] for column in columns) for i in range(target.dimension)
    )
    return rows, source.dimension, target.dimension


def lefschetz_matrix(algebra, omega, k):
    if algebra.dim % 2:
        raise UsageError(f"Lefschetz maps need even dimension; {algebra.name} has {algebra.dim}")
    n = algebra.dim // 2
    if not 0 <= k <= n:
        raise UsageError(f"k must lie in 0..{n}, got {k}")
    require_closed(algebra, omega, 'symplectic form candidate')
    rows, source, target = wedge_class_rows(algebra, power(omega, k), n - k)
    return LefschetzMatrix(k, rows, source, target, omega.domain)


@dataclass(frozen=True)
class LefschetzDegree:
    k: int
    rank: int
    source_dimension: int
    target_dimension: int
    surjective: bool
    iso: bool

    @property
    def dual(self):
        return self.source_dimension == self.target_dimension

    @property
    def flagged(self):
        # Surjective but not injective: only possible when duality fails.
        return self.surjective != self.iso


@dataclass(frozen=True)
class HLCReport:
    algebra: str
    omega: str
    betti: tuple
    degrees: tuple
    verdict: bool

    def to_dict(self):
        return {
            'algebra': self.algebra,
            'omega': self.omega,
            'betti': list(self.betti),
            'hlc': {
                str(entry.k): {
                    'rank': entry.rank,
                    'surjective': entry.surjective,
                    'iso': entry.iso,
                    'dual': entry.dual,
                }
                for entry in self.degrees
            },
            'verdict': self.verdict,
        }


def hlc_check(algebra, symplectic):
    """
    Hard Lefschetz test: every [·∧ω^k]: H^(n-k) -> H^(n+k), k = 1..n, surjective.

    ``symplectic`` is a SymplecticStructure or a closed nondegenerate 2-form.
    """
    omega = getattr(symplectic, 'omega', symplectic)
    require_closed(algebra, omega, 'symplectic form candidate')
    if volume_data(omega) is None:
        raise DegenerateFormError(f"{render_form(omega)} is degenerate")
    n = algebra.dim // 2
    degrees = []
    for k in range(1, n + 1):
        matrix = lefschetz_matrix(algebra, omega, k)
        rank = matrix.rank()
        surjective = rank == matrix.target_dimension
        degrees.append(LefschetzDegree(
            k=k,
            rank=rank,
            source_dimension=matrix.source_dimension,
            target_dimension=matrix.target_dimension,
            surjective=surjective,
            iso=surjective and rank == matrix.source_dimension,
        ))
        if degrees[-1].flagged:
            logger.warning("%s: L^%d is surjective but not injective", algebra.name, k)
    report = HLCReport(
        algebra=algebra.name,
        omega=render_form(omega),
        betti=betti_numbers(algebra),
        degrees=tuple(degrees),
        verdict=all(entry.surjective for entry in degrees),
    )
    logger.info("HLC %s at %s: %s", algebra.name, report.omega, report.verdict)
    return report
