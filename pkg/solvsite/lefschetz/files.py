"""
JSON algebra files.

    {"name": "sol3xr", "dim": 4, "d": {"2": [[1, 2, "1"]], "3": [[1, 3, "-1"]]},
     "omega": "e14+e23", "complex_pairs": [[1, 2], [3, 4]],
     "completely_solvable": true, "lattice": true,
     "family": {"basis": ["e14", "e23"], "names": ["a", "b"]}}

Everything after "d" is optional.
"""
import json
import logging
from pathlib import Path

from django.core.serializers.json import DjangoJSONEncoder

from .catalog import DE_RHAM, INVARIANT, CatalogEntry, catalog_entry
from .exceptions import AlgebraLoadError, UsageError
from .liealgebra import LieAlgebraPresentation, validate

logger = logging.getLogger(__name__)


def _read_document(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise UsageError(f"no such algebra file: {path}") from None
    except json.JSONDecodeError as exc:
        raise AlgebraLoadError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def _pairs(document):
    raw = document.get('complex_pairs')
    if raw is None:
        return None
    try:
        return tuple((int(a), int(b)) for a, b in raw)
    except (TypeError, ValueError):
        raise AlgebraLoadError("complex_pairs must be a list of [a, b] index pairs") from None


def _family(document):
    family = document.get('family')
    if family is None:
        return None, None
    if not isinstance(family, dict) or not isinstance(family.get('basis', []), list):
        raise AlgebraLoadError("family must be {\"basis\": [...], \"names\": [...]}")
    basis = tuple(str(text) for text in family.get('basis', ()))
    names = tuple(str(name) for name in family.get('names', ())) or None
    if names and len(names) != len(basis):
        raise AlgebraLoadError(f"family has {len(basis)} basis forms but {len(names)} names")
    return basis or None, names


def entry_from_document(document, source='<document>'):
    """
    Builds and validates an entry. A Jacobi failure is fatal; a failed
    unimodularity check is logged and kept in ``diagnostics``.
    """
    algebra = LieAlgebraPresentation.from_document(document)
    diagnostics = validate(algebra)
    if not diagnostics.jacobi_ok:
        generator = diagnostics.jacobi_failures[0]
        raise AlgebraLoadError(f"{source}: Jacobi violation at generator {generator}", generator=generator)
    if not diagnostics.unimodular:
        logger.warning("%s: %s", source, '; '.join(diagnostics.messages))
    basis, names = _family(document)
    return CatalogEntry(
        algebra=algebra,
        omega=document.get('omega'),
        complex_pairs=_pairs(document),
        family_basis=basis,
        family_names=names,
        cohomology_label=DE_RHAM if algebra.completely_solvable else INVARIANT,
        description=str(document.get('description', '')),
        diagnostics=diagnostics,
    )


def read_presentation(path):
    """The presentation in a file, without the load-time validation."""
    return LieAlgebraPresentation.from_document(_read_document(path))


def load_entry(path):
    entry = entry_from_document(_read_document(path), source=str(path))
    logger.info("loaded %s (dim %d) from %s", entry.name, entry.algebra.dim, path)
    return entry


def load_algebra(path):
    return load_entry(path).algebra


def save_algebra(algebra_or_entry, path):
    """Writes a presentation (or an entry with its defaults) as JSON."""
    document = algebra_or_entry.to_document()
    if isinstance(algebra_or_entry, CatalogEntry) and algebra_or_entry.description:
        document['description'] = algebra_or_entry.description
    Path(path).write_text(
        json.dumps(document, cls=DjangoJSONEncoder, indent=2, sort_keys=True) + '\n',
        encoding='utf-8',
    )
    logger.info("saved %s to %s", document['name'], path)


def looks_like_file(source):
    return str(source).endswith('.json') or Path(str(source)).is_file()


def resolve_entry(source):
    """A catalog name, or a path to a JSON algebra file."""
    if looks_like_file(source):
        return load_entry(source)
    return catalog_entry(source)
