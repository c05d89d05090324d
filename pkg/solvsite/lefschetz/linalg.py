"""
Exact linear algebra on row lists, backed by sympy's ``DomainMatrix``.

Matrices are passed around as plain lists of rows whose entries are domain
elements (``QQ`` unless stated otherwise), because most of them are built
column by column from images of basis forms. ``DomainMatrix`` does the
elimination: ``rref`` for ranks, kernels and solves, Bareiss for
determinants over polynomial rings.
"""
import logging

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import CertificateFailure

logger = logging.getLogger(__name__)


def domain_matrix(rows, ncols, domain=QQ):
    return DomainMatrix([list(row) for row in rows], (len(rows), ncols), domain)


def columns_to_rows(columns, length):
    """Turns a list of column vectors of the given length into rows."""
    return [[column[i] for column in columns] for i in range(length)]


def rref(rows, ncols):
    """
    Reduced row echelon form over QQ.

    Returns:
        (list of rows, tuple of pivot column indices)
    """
    if not rows or not ncols:
        return [list(row) for row in rows], ()
    reduced, pivots = domain_matrix(rows, ncols).rref()
    return reduced.to_list(), tuple(pivots)


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def column_rank(columns, length):
    """Rank of the span of the given vectors."""
    if not columns:
        return 0
    return rank(columns_to_rows(columns, length), len(columns))


def kernel_basis(rows, ncols):
    """
    Basis of {x : rows * x = 0}, one vector per free column.

    Each vector has a 1 at its free column and zeros at the other free
    columns, so the basis is canonical for the row space.
    """
    if not rows:
        return [_unit(i, ncols) for i in range(ncols)]
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vector = [QQ.zero] * ncols
        vector[f] = QQ.one
        for i, p in enumerate(pivots):
            vector[p] = -reduced[i][f]
        basis.append(vector)
    return basis


def solve(rows, ncols, rhs):
    """
    One exact solution x of rows * x = rhs, free variables set to zero.

    Returns:
        list of QQ, or None when the system is inconsistent.
    """
    if not ncols:
        return [] if all(not value for value in rhs) else None
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [QQ.zero] * ncols
    for i, p in enumerate(pivots):
        solution[p] = reduced[i][ncols]
    return solution


def independent_columns(columns, length):
    """Indices of a maximal independent subset, earliest columns first."""
    if not columns or not length:
        return []
    _, pivots = rref(columns_to_rows(columns, length), len(columns))
    return list(pivots)


def determinant(rows, domain=QQ):
    """Exact determinant; Bareiss elimination over polynomial domains."""
    if not rows:
        return domain.one
    return domain_matrix(rows, len(rows), domain).det()


def inverse(rows, domain=QQ):
    """
    Exact inverse. Over a polynomial domain the inverse is computed in the
    fraction field and every entry must come back as a polynomial.
    """
    size = len(rows)
    if domain == QQ:
        return domain_matrix(rows, size, QQ).inv().to_list()
    inverted = domain_matrix(rows, size, domain).to_field().inv().to_list()
    result = []
    for row in inverted:
        converted = []
        for entry in row:
            if not entry.denom.is_ground:
                raise CertificateFailure(
                    "matrix inverse is not polynomial: the determinant does not divide the adjugate"
                )
            converted.append(entry.numer.quo_ground(entry.denom.LC))
        result.append(converted)
    return result


def matmul(left, right, ncols):
    """Product of two QQ matrices given as rows; ``ncols`` is the width of ``right``."""
    if not left or not ncols:
        return [[QQ.zero] * ncols for _ in left]
    inner = len(right)
    if not inner:
        return [[QQ.zero] * ncols for _ in left]
    product = domain_matrix(left, inner) * domain_matrix(right, ncols)
    return product.to_list()


def left_inverse(columns, length):
    """
    Rows of (MᵀM)⁻¹Mᵀ for M with the given independent columns.

    Applied to any vector in the span of the columns it returns the unique
    coefficients of that vector.
    """
    if not columns:
        return []
    matrix = domain_matrix(columns_to_rows(columns, length), len(columns))
    transposed = matrix.transpose()
    return ((transposed * matrix).inv() * transposed).to_list()


def apply(rows, vector, zero):
    """
    rows * vector where the vector may hold polynomial entries.

    ``zero`` is the zero of the vector's domain.
    """
    result = []
    for row in rows:
        total = zero
        for entry, value in zip(row, vector):
            if entry and value:
                total = total + value * entry
        result.append(total)
    return result


def _unit(index, size):
    vector = [QQ.zero] * size
    vector[index] = QQ.one
    return vector
