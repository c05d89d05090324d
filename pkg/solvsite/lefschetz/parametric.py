"""
Parametric families Ω = Σ cᵢ βᵢ over H² and their condition polynomials.

The symplectic condition of the family is the top coefficient of Ωⁿ and the
Hard Lefschetz condition is the nonvanishing of one determinant per k. The
verdicts compare where these polynomials vanish: exactly by divisibility
where possible, by seeded sampling over rational points otherwise.
"""
import logging
import random
from dataclasses import dataclass, field

from django.conf import settings
from django.db import models
from sympy.polys.domains import QQ

from . import linalg
from .cohomology import cohomology_basis, hlc_check, lefschetz_matrix, require_closed, wedge_class_rows
from .exceptions import InvariantViolation, PreconditionError, StructuralError, UsageError
from .exterior import Form, power, render_form, volume_data
from .scalarring import (
    factors_within, poly_eval, poly_proportional, polynomial_ring, render_poly,
    render_scalar, variable_names,
)

logger = logging.getLogger(__name__)


# --- Families ---

@dataclass(frozen=True, eq=False)
class ParametricFamily:
    algebra: object
    names: tuple
    ring: object
    # Ω = Σ names[i]·basis[i], a closed 2-form over ring.to_domain().
    omega: Form
    basis: tuple

    @property
    def domain(self):
        return self.omega.domain

    def point(self, values):
        """Normalizes ``values`` (mapping or sequence) to a tuple of QQ in name order."""
        if isinstance(values, dict):
            missing = [name for name in self.names if name not in values]
            if missing:
                raise UsageError(f"no value given for {', '.join(missing)}")
            return tuple(QQ.convert(values[name]) for name in self.names)
        values = tuple(QQ.convert(value) for value in values)
        if len(values) != len(self.names):
            raise UsageError(f"expected {len(self.names)} parameter values, got {len(values)}")
        return values

    def specialize(self, values):
        """The rational 2-form at a parameter point."""
        return self.omega.specialize(self.point(values))


def generic_family(algebra, basis_override=None, names=None):
    """
    Ω = Σ cᵢ·repᵢ over the H² representatives, or over ``basis_override``
    (closed 2-forms) when given.

    Returns:
        ParametricFamily
    """
    if basis_override:
        basis = tuple(basis_override)
        for form in basis:
            if form.degree != 2:
                raise UsageError(f"family basis forms must be 2-forms, got {render_form(form)}")
            require_closed(algebra, form, 'family basis form')
        _warn_if_dependent(algebra, basis)
    else:
        basis = cohomology_basis(algebra, 2).representatives
    if not basis:
        raise PreconditionError(f"{algebra.name} has b2 = 0: no symplectic family")
    if names is None:
        names = tuple(f'c{i}' for i in range(1, len(basis) + 1))
    names = tuple(names)
    if len(names) != len(basis):
        raise UsageError(f"{len(names)} parameter names for {len(basis)} basis forms")
    if len(set(names)) != len(names):
        raise UsageError(f"parameter names repeat: {', '.join(names)}")

    ring = polynomial_ring(names)
    domain = ring.to_domain()
    omega = Form.zero(algebra.dim, 2, domain)
    for generator, form in zip(ring.gens, basis):
        omega = omega + form.convert(domain).scale(generator)
    logger.debug("family on %s: %s", algebra.name, render_form(omega))
    return ParametricFamily(algebra, names, ring, omega, basis)


def _warn_if_dependent(algebra, basis):
    h2 = cohomology_basis(algebra, 2)
    coordinates = [list(h2.coordinates(form)) for form in basis]
    if linalg.column_rank(coordinates, h2.dimension) < len(basis):
        logger.warning("%s: family basis classes are linearly dependent in H^2", algebra.name)


# --- Condition polynomials ---

@dataclass(frozen=True)
class ConditionPolynomial:

    class Meaning(models.TextChoices):
        SYMPLECTIC_VOLUME = 'SymplecticVolume', 'Symplectic volume'
        LEFSCHETZ_DET = 'LefschetzDet', 'Lefschetz determinant'

    poly: object
    meaning: str
    # k for a Lefschetz determinant.
    degree: int = None

    @property
    def label(self):
        if self.meaning == self.Meaning.LEFSCHETZ_DET:
            return f'{self.meaning}({self.degree})'
        return str(self.meaning)

    def __str__(self):
        return render_poly(self.poly)


def volume_polynomial(family):
    """The e^{1..2n} coefficient of Ωⁿ."""
    dim = family.algebra.dim
    if dim % 2:
        raise UsageError(f"{family.algebra.name} has odd dimension {dim}")
    top = power(family.omega, dim // 2)
    return ConditionPolynomial(
        top.coefficient(tuple(range(1, dim + 1))),
        ConditionPolynomial.Meaning.SYMPLECTIC_VOLUME,
    )


def lefschetz_determinants(family):
    """
    det of [·∧Ω^k]: H^(n-k) -> H^(n+k) for k = 1..n, by fraction-free elimination.

    Returns:
        list of ConditionPolynomial, index k - 1.
    """
    algebra = family.algebra
    n = algebra.dim // 2
    determinants = []
    for k in range(1, n + 1):
        matrix = lefschetz_matrix(algebra, family.omega, k)
        if not matrix.is_square:
            raise StructuralError(
                f"L^{k}: H^{n - k} -> H^{n + k} is {matrix.target_dimension}x{matrix.source_dimension}",
                degree=k,
            )
        value = matrix.determinant() if matrix.source_dimension else family.ring.one
        determinants.append(ConditionPolynomial(
            value, ConditionPolynomial.Meaning.LEFSCHETZ_DET, degree=k,
        ))
        logger.debug("%s: det L^%d = %s", algebra.name, k, render_poly(value))
    return determinants


def cup_rows(family, degree):
    """Matrix of [·∧Ω]: H^degree -> H^(degree+2), polynomial entries."""
    return wedge_class_rows(family.algebra, family.omega, degree)


# --- Sampling ---

class PointSampler:
    """
    Seeded rational points in [-range, range] with denominators up to
    ``denominator``, optionally pushed onto the zero set of a polynomial.
    """

    def __init__(self, names, seed=None, bound=None, denominator=None):
        self.names = tuple(names)
        self.random = random.Random(settings.LEFSCHETZ_SEED if seed is None else seed)
        self.bound = settings.LEFSCHETZ_SAMPLE_RANGE if bound is None else bound
        self.denominator = settings.LEFSCHETZ_SAMPLE_DENOMINATOR if denominator is None else denominator

    def scalar(self):
        q = self.random.randint(1, self.denominator)
        return QQ(self.random.randint(-self.bound * q, self.bound * q), q)

    def point(self):
        return {name: self.scalar() for name in self.names}

    def point_on(self, poly):
        """
        A random point with one degree-1 variable of ``poly`` solved so that
        poly vanishes, or None when poly has no such variable.
        """
        linear = [i for i in range(len(self.names)) if poly.degree(i) == 1]
        point = self.point()
        if not linear:
            return None
        name = self.names[self.random.choice(linear)]
        at_zero = poly_eval(poly, {**point, name: QQ.zero})
        at_one = poly_eval(poly, {**point, name: QQ.one})
        if at_one == at_zero:
            return None
        point[name] = -at_zero / (at_one - at_zero)
        return point


def _render_point(point):
    return {name: render_scalar(value) for name, value in point.items()}


def _raw(p):
    return p.poly if isinstance(p, ConditionPolynomial) else p


# --- Comparing zero sets ---

@dataclass(frozen=True)
class ComparisonVerdict:

    class Comparison(models.TextChoices):
        PROPORTIONAL_EQUAL = 'ProportionalEqual', 'Proportional'
        FACTORWISE_COMPATIBLE = 'FactorwiseCompatible', 'Same factors'
        SAMPLED_CONSISTENT = 'SampledConsistent', 'Consistent on samples'
        DIFFERENT = 'Different', 'Different'

    kind: str
    ratio: object = None
    samples: int = 0
    witness: dict = None

    def to_dict(self):
        document = {'verdict': str(self.kind)}
        if self.ratio is not None:
            document['ratio'] = render_scalar(self.ratio)
        if self.kind == self.Comparison.SAMPLED_CONSISTENT:
            document['samples'] = self.samples
        if self.witness is not None:
            document['witness'] = _render_point(self.witness)
        return document


def condition_compare(p, q, seed=None, samples=None):
    """
    Decides whether p and q vanish at the same places, trying in order:
    proportionality, mutual factor containment, then sampling at random points
    and at points pushed onto either zero set.
    """
    p, q = _raw(p), _raw(q)
    if variable_names(p) != variable_names(q):
        raise UsageError(f"mismatched parameters {variable_names(p)} and {variable_names(q)}")
    Comparison = ComparisonVerdict.Comparison

    ratio = poly_proportional(p, q)
    if ratio is not None:
        return ComparisonVerdict(Comparison.PROPORTIONAL_EQUAL, ratio=ratio)
    if p and q and factors_within(p, q) and factors_within(q, p):
        return ComparisonVerdict(Comparison.FACTORWISE_COMPATIBLE)

    count = settings.LEFSCHETZ_SAMPLE_COUNT if samples is None else samples
    sampler = PointSampler(variable_names(p), seed=seed)
    checked = 0
    for index in range(count):
        if index % 3 == 0:
            point = sampler.point()
        else:
            point = sampler.point_on(p if index % 3 == 1 else q) or sampler.point()
        checked += 1
        if (poly_eval(p, point) == 0) != (poly_eval(q, point) == 0):
            logger.info("zero sets differ at %s", _render_point(point))
            return ComparisonVerdict(Comparison.DIFFERENT, witness=point)
    return ComparisonVerdict(Comparison.SAMPLED_CONSISTENT, samples=checked)


# --- HLC over the whole family ---

@dataclass(frozen=True)
class HLCVerdict:

    class Verdict(models.TextChoices):
        EVERYWHERE_HLC = 'EverywhereHLC', 'HLC at every symplectic member'
        NOWHERE_HLC = 'NowhereHLC', 'HLC at no symplectic member'
        MIXED = 'Mixed', 'HLC at some members only'
        SAMPLED_CONSISTENT = 'SampledConsistent', 'HLC at every sampled member'
        UNKNOWN = 'Unknown', 'Undecided'

    kind: str
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class HLCCertificate:
    family: ParametricFamily
    volume: ConditionPolynomial
    determinants: tuple
    verdict: HLCVerdict

    def to_dict(self):
        return {
            'algebra': self.family.algebra.name,
            'parameters': list(self.family.names),
            'omega': render_form(self.family.omega),
            'volume_poly': render_poly(self.volume.poly),
            'lefschetz_dets': {str(det.degree): render_poly(det.poly) for det in self.determinants},
            'verdict': str(self.verdict.kind),
            'evidence': self.verdict.evidence,
        }


def _hlc_at(determinants, point):
    return all(poly_eval(det.poly, point) != 0 for det in determinants)


def hlc_everywhere(family, seed=None, samples=None):
    """
    Decides HLC across the symplectic members of ``family``.

    Returns:
        HLCCertificate
    """
    Verdict = HLCVerdict.Verdict
    volume = volume_polynomial(family)
    determinants = tuple(lefschetz_determinants(family)) if volume.poly else ()
    verdict = _decide(family, volume, determinants, seed, samples)
    logger.info("%s: parametric verdict %s", family.algebra.name, verdict.kind)
    if verdict.kind == Verdict.UNKNOWN:
        logger.warning("%s: %s", family.algebra.name, verdict.evidence.get('reason'))
    return HLCCertificate(family, volume, determinants, verdict)


def _decide(family, volume, determinants, seed, samples):
    Verdict = HLCVerdict.Verdict
    if not volume.poly:
        return HLCVerdict(Verdict.UNKNOWN, {'reason': 'no symplectic forms in family'})

    for det in determinants:
        if not det.poly:
            return HLCVerdict(Verdict.NOWHERE_HLC, {
                'identically_zero': det.degree,
                'volume_nonzero': True,
            })

    certified = {}
    for det in determinants:
        if not factors_within(det.poly, volume.poly):
            break
        comparison = condition_compare(det.poly, volume.poly, seed=seed, samples=0)
        certified[str(det.degree)] = (
            str(comparison.kind)
            if comparison.kind != ComparisonVerdict.Comparison.SAMPLED_CONSISTENT
            else 'FactorsWithinVolume'
        )
    else:
        return HLCVerdict(Verdict.EVERYWHERE_HLC, {'certificates': certified})

    count = settings.LEFSCHETZ_SAMPLE_COUNT if samples is None else samples
    sampler = PointSampler(family.names, seed=seed)
    symplectic = 0
    hlc_witness = None
    non_hlc_witness = None
    for index in range(count):
        point = None
        if index % 2 and determinants:
            point = sampler.point_on(determinants[index // 2 % len(determinants)].poly)
        if point is None:
            point = sampler.point()
        if poly_eval(volume.poly, point) == 0:
            continue
        symplectic += 1
        if _hlc_at(determinants, point):
            hlc_witness = hlc_witness or point
        else:
            non_hlc_witness = non_hlc_witness or point
        if hlc_witness and non_hlc_witness:
            return HLCVerdict(Verdict.MIXED, {
                'hlc': _render_point(hlc_witness),
                'not_hlc': _render_point(non_hlc_witness),
            })

    if not symplectic:
        return HLCVerdict(Verdict.UNKNOWN, {'reason': f'no symplectic point among {count} samples'})
    if non_hlc_witness is None:
        return HLCVerdict(Verdict.SAMPLED_CONSISTENT, {'samples': count, 'symplectic': symplectic})
    return HLCVerdict(Verdict.UNKNOWN, {
        'reason': 'HLC failed at every symplectic sample without an identically zero determinant',
        'not_hlc': _render_point(non_hlc_witness),
    })


def verify_specialization(family, seed=None, points=None):
    """
    Evaluates the volume and Lefschetz determinant polynomials of ``family``
    at seeded rational points and compares them with the scalar pipeline run
    on the specialized form, including the single-point HLC verdict.

    Returns:
        the number of symplectic points checked.
    """
    count = settings.LEFSCHETZ_SPECIALIZATION_POINTS if points is None else points
    sampler = PointSampler(family.names, seed=seed)
    volume = volume_polynomial(family).poly
    determinants = lefschetz_determinants(family) if volume else ()
    checked = 0
    for _ in range(count):
        point = sampler.point()
        omega = family.specialize(point)
        data = volume_data(omega)
        if poly_eval(volume, point) != (data[1] if data else QQ.zero):
            raise InvariantViolation(f"volume polynomial disagrees at {_render_point(point)}")
        for det in determinants:
            scalar = lefschetz_matrix(family.algebra, omega, det.degree).determinant()
            if poly_eval(det.poly, point) != scalar:
                raise InvariantViolation(f"det L^{det.degree} disagrees at {_render_point(point)}")
        if data is None:
            continue
        if hlc_check(family.algebra, omega).verdict is not _hlc_at(determinants, point):
            raise InvariantViolation(f"HLC verdict disagrees at {_render_point(point)}")
        checked += 1
    logger.info("%s: certificates specialize at %d of %d points", family.algebra.name, checked, count)
    return checked
