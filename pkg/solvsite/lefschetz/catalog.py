"""
Builtin Lie algebras with their default symplectic and almost-complex data.

Generators are the coframe e^1..e^n. For fms_m6 the coframe is
(α1, β1, α2, β2, γ, η) = (e^1, ..., e^6) with the weight c normalized to 1.
"""
import logging
from dataclasses import dataclass

from .exceptions import UnknownAlgebraError, UsageError
from .expressions import parse_form
from .liealgebra import LieAlgebraPresentation

logger = logging.getLogger(__name__)

DE_RHAM = 'de Rham'
INVARIANT = 'invariant cohomology'


@dataclass(frozen=True)
class CatalogEntry:
    """
    An algebra plus the structures the reports use by default.

    ``complex_pairs`` lists coframe pairs (a, b) meaning J e^a = -e^b and
    J e^b = e^a. ``family_basis`` / ``family_names`` override the H² basis
    of the generic symplectic family.
    """
    algebra: LieAlgebraPresentation
    omega: str = None
    complex_pairs: tuple = None
    family_basis: tuple = None
    family_names: tuple = None
    cohomology_label: str = DE_RHAM
    description: str = ''
    # Outcome of validate() for algebras loaded from files.
    diagnostics: object = None

    @property
    def name(self):
        return self.algebra.name

    def omega_form(self, text=None):
        """``text`` parsed on this algebra, falling back to the default ω."""
        text = text or self.omega
        if not text:
            raise UsageError(f"{self.name} has no default symplectic form; pass --omega")
        return parse_form(text, self.algebra)

    def pairs(self, pairs=None):
        pairs = pairs or self.complex_pairs
        if not pairs:
            raise UsageError(f"{self.name} has no default almost-complex structure; pass --complex-pairs")
        return tuple(tuple(pair) for pair in pairs)

    def family_forms(self, basis=None, names=None):
        """
        Basis forms and parameter names of the generic family, or (None, None)
        for the H² representatives with names c1..cm.
        """
        texts = basis or self.family_basis
        if not texts:
            return None, tuple(names) if names else None
        forms = [parse_form(text, self.algebra) for text in texts]
        names = names or (self.family_names if not basis else None)
        return forms, tuple(names) if names else None

    def to_document(self):
        document = self.algebra.to_document()
        if self.omega:
            document['omega'] = self.omega
        if self.complex_pairs:
            document['complex_pairs'] = [list(pair) for pair in self.complex_pairs]
        if self.family_basis:
            document['family'] = {
                'basis': list(self.family_basis),
                'names': list(self.family_names or ()),
            }
        return document


def _entry(name, dim, d, **options):
    solvable = options.pop('completely_solvable', True)
    algebra = LieAlgebraPresentation.from_mapping(
        name, dim, d, completely_solvable=solvable, lattice=True,
    )
    return CatalogEntry(algebra=algebra, **options)


_STANDARD_4 = ((1, 2), (3, 4))
_STANDARD_6 = ((1, 2), (3, 4), (5, 6))

CATALOG = {
    entry.name: entry for entry in (
        _entry(
            'r4', 4, {},
            omega='e12+e34', complex_pairs=_STANDARD_4,
            description='abelian R^4 (flat torus)',
        ),
        _entry(
            'r6', 6, {},
            omega='e12+e34+e56', complex_pairs=_STANDARD_6,
            description='abelian R^6 (flat torus)',
        ),
        _entry(
            'nil3xr', 4, {3: [(1, 2, -1)]},
            omega='e14+e23',
            description='Heisenberg x R (Kodaira-Thurston)',
        ),
        _entry(
            'nil4', 4, {1: [(2, 4, 1)], 2: [(3, 4, 1)]},
            omega='e14+e23',
            description='filiform nilpotent nil^4',
        ),
        _entry(
            'sol3xr', 4, {2: [(1, 2, 1)], 3: [(1, 3, -1)]},
            omega='e14+e23',
            description='sol^3 x R (completely solvable)',
        ),
        _entry(
            'r30xr', 4, {2: [(1, 3, -1)], 3: [(1, 2, 1)]},
            omega='e14+e23', completely_solvable=False, cohomology_label=INVARIANT,
            description="r'_{3,0} x R (not completely solvable; hyperelliptic quotient)",
        ),
        _entry(
            'nakamura6', 6,
            {3: [(1, 3, 1)], 4: [(1, 4, -1)], 5: [(1, 5, 1)], 6: [(1, 6, -1)]},
            omega='e12+e34+e56', complex_pairs=_STANDARD_6,
            family_basis=('e12', 'e34', 'e56', 'e36', 'e45'),
            family_names=('c1', 'c2', 'c3', 'c4', 'c5'),
            description='completely solvable Nakamura manifold N^6',
        ),
        # de(alpha_i) = -alpha_i ∧ gamma, de(beta_i) = +beta_i ∧ gamma: the weights
        # that make alpha_i ∧ beta_j closed, as the cohomology of M^6(c) requires.
        _entry(
            'fms_m6', 6,
            {1: [(1, 5, -1)], 2: [(2, 5, 1)], 3: [(3, 5, -1)], 4: [(4, 5, 1)]},
            omega='e12+e34+e56', complex_pairs=_STANDARD_6,
            family_basis=('e12+e34+e56', 'e14-e23', 'e12-e56', 'e34-e56', 'e14+e23'),
            family_names=('c', 'c1', 'c2', 'c3', 'a'),
            description='completely solvable M^6(c) with c = 1',
        ),
    )
}


def catalog_names():
    return list(CATALOG)


def catalog_entry(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownAlgebraError(name, catalog_names()) from None


def catalog_get(name):
    """The presentation of a builtin algebra."""
    return catalog_entry(name).algebra
