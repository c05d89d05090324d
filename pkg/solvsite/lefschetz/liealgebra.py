"""
Lie algebras presented by Maurer-Cartan structure equations.

A presentation lists, for each generator e^k of the dual, the terms
coeff·e^i∧e^j (i < j) of de^k. Presentations are immutable and hashable, so
the differential can be cached per algebra.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.domains import QQ

from .exceptions import AlgebraLoadError
from .exterior import Form, differential, monomial_basis
from .scalarring import parse_scalar, render_scalar

logger = logging.getLogger(__name__)

MAX_DIMENSION = 16


@dataclass(frozen=True)
class Diagnostics:
    """Outcome of ``validate``: never raised, always reported."""

    jacobi_ok: bool
    unimodular: bool
    # Generators k with d(de^k) != 0.
    jacobi_failures: tuple = ()
    # Indices m with Σ_k coeff(e^k∧e^m in de^k) != 0.
    trace_failures: tuple = ()

    @property
    def messages(self):
        messages = [f"Jacobi violation at generator {k}" for k in self.jacobi_failures]
        if not self.unimodular:
            messages.append(
                "not unimodular (trace fails at generator(s) "
                + ', '.join(str(m) for m in self.trace_failures) + ")"
            )
        return messages


@dataclass(frozen=True)
class LieAlgebraPresentation:
    name: str
    dim: int
    # differentials[k - 1] is a sorted tuple of (i, j, coeff) for de^k.
    differentials: tuple
    # Documentation-only claims; the tool does not verify them.
    completely_solvable: bool = False
    lattice: bool = False

    @classmethod
    def from_mapping(cls, name, dim, mapping, completely_solvable=False, lattice=False):
        """
        Builds a presentation from ``{k: [(i, j, coeff), ...]}``.

        Coefficients may be QQ elements, ints or rational strings. Generators
        missing from the mapping have zero differential.
        """
        if not isinstance(dim, int) or isinstance(dim, bool) or not 1 <= dim <= MAX_DIMENSION:
            raise AlgebraLoadError(f"dimension must be an integer in 1..{MAX_DIMENSION}, got {dim!r}")
        rows = [dict() for _ in range(dim)]
        for key, triples in mapping.items():
            k = _index(key, dim, 'generator')
            for triple in triples:
                try:
                    i, j, coeff = triple
                except (TypeError, ValueError):
                    raise AlgebraLoadError(
                        f"de^{k}: expected [i, j, coeff], got {triple!r}", generator=k
                    ) from None
                i, j = _index(i, dim, 'index', k), _index(j, dim, 'index', k)
                if i >= j:
                    raise AlgebraLoadError(f"de^{k}: need i < j in term ({i}, {j})", generator=k)
                if (i, j) in rows[k - 1]:
                    raise AlgebraLoadError(f"de^{k}: duplicate term e{i}{j}", generator=k)
                value = coeff if isinstance(coeff, type(QQ.one)) else parse_scalar(coeff)
                if value:
                    rows[k - 1][(i, j)] = value
        differentials = tuple(
            tuple((i, j, value) for (i, j), value in sorted(row.items())) for row in rows
        )
        return cls(name, dim, differentials, bool(completely_solvable), bool(lattice))

    def generator_differential(self, k):
        """de^k as a dict {(i, j): coeff}."""
        return {(i, j): value for i, j, value in self.differentials[k - 1]}

    def generator_form(self, k):
        return Form(self.dim, 2, self.generator_differential(k))

    @cached_property
    def is_abelian(self):
        return not any(self.differentials)

    # --- JSON document ---

    def to_document(self):
        document = {
            'name': self.name,
            'dim': self.dim,
            'd': {
                str(k): [[i, j, render_scalar(value)] for i, j, value in terms]
                for k, terms in enumerate(self.differentials, start=1)
                if terms
            },
        }
        if self.completely_solvable:
            document['completely_solvable'] = True
        if self.lattice:
            document['lattice'] = True
        return document

    @classmethod
    def from_document(cls, document):
        if not isinstance(document, dict):
            raise AlgebraLoadError("an algebra document must be a JSON object")
        for key in ('name', 'dim'):
            if key not in document:
                raise AlgebraLoadError(f"missing field {key!r}")
        mapping = document.get('d', {})
        if not isinstance(mapping, dict):
            raise AlgebraLoadError("field 'd' must map generator indices to term lists")
        return cls.from_mapping(
            str(document['name']),
            document['dim'],
            mapping,
            completely_solvable=document.get('completely_solvable', False),
            lattice=document.get('lattice', False),
        )


def _index(value, dim, what, generator=None):
    try:
        index = int(value)
    except (TypeError, ValueError):
        raise AlgebraLoadError(f"{what} {value!r} is not an integer", generator=generator) from None
    if not 1 <= index <= dim:
        raise AlgebraLoadError(f"{what} {index} out of range 1..{dim}", generator=generator)
    return index


def validate(algebra):
    """
    Checks d∘d = 0 on every generator and unimodularity.

    Unimodularity is read off the structure constants: for every m,
    Σ_k (coefficient of e^k∧e^m in de^k) must vanish.

    Returns:
        Diagnostics
    """
    jacobi_failures = []
    for k in range(1, algebra.dim + 1):
        if not differential(algebra, algebra.generator_form(k)).is_zero:
            jacobi_failures.append(k)

    trace_failures = []
    for m in range(1, algebra.dim + 1):
        trace = QQ.zero
        for k in range(1, algebra.dim + 1):
            if k == m:
                continue
            terms = algebra.generator_differential(k)
            if k < m:
                trace += terms.get((k, m), QQ.zero)
            else:
                trace -= terms.get((m, k), QQ.zero)
        if trace:
            trace_failures.append(m)

    diagnostics = Diagnostics(
        jacobi_ok=not jacobi_failures,
        unimodular=not trace_failures,
        jacobi_failures=tuple(jacobi_failures),
        trace_failures=tuple(trace_failures),
    )
    logger.debug("validated %s: %s", algebra.name, diagnostics)
    return diagnostics


def check_closed_on_all_degrees(algebra):
    """d∘d = 0 on every monomial of every degree; returns the failing monomials."""
    failures = []
    for degree in range(algebra.dim + 1):
        for indices in monomial_basis(algebra.dim, degree):
            twice = differential(algebra, differential(algebra, Form.monomial(algebra.dim, indices)))
            if not twice.is_zero:
                failures.append(indices)
    return failures
