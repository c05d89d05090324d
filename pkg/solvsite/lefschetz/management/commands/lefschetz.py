import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.core.serializers.json import DjangoJSONEncoder
from django.template.loader import render_to_string

from ...almostkaehler import (
    AlmostComplexStructure, almost_kaehler_report, compatibility_check, j_invariant_cohomology,
    primitive_j_cohomology,
)
from ...catalog import catalog_entry, catalog_names
from ...cohomology import betti, betti_numbers, cohomology_basis, hlc_check
from ...exceptions import AlgebraLoadError, LefschetzError, PreconditionError, UsageError
from ...exterior import render_form
from ...files import load_entry, looks_like_file, read_presentation, resolve_entry, save_algebra
from ...forms import Command as Subcommand, CommandRequestForm
from ...liealgebra import validate
from ...parametric import HLCVerdict, cup_rows, generic_family, hlc_everywhere
from ...scalarring import render_coefficient
from ...symplectic import (
    SymplecticStructure, brylinski_cohomology, ddlambda_lemma_check, equivalence_audit,
    tseng_yau_cohomology,
)

logger = logging.getLogger(__name__)
app_logger = logging.getLogger('lefschetz')

# --verbosity 2 and 3 open up the app's logger.
VERBOSITY_LEVELS = {2: logging.INFO, 3: logging.DEBUG}


class Command(BaseCommand):
    help = "Cohomology, Hard Lefschetz and almost-Kähler reports for Lie algebras."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)
        for choice, label in Subcommand.choices:
            sub = subparsers.add_parser(choice, help=label)
            if choice == Subcommand.EXPLORE:
                sub.add_argument('files', nargs='+')
            elif choice != Subcommand.LIST:
                sub.add_argument('algebra')
            if choice == Subcommand.EXPORT:
                sub.add_argument('path')
            # --- Shared flags ---
            sub.add_argument('--omega')
            sub.add_argument('--complex-pairs', dest='complex_pairs')
            sub.add_argument('--basis')
            sub.add_argument('--names')
            sub.add_argument('--degree', type=int)
            sub.add_argument('--seed', type=int)
            sub.add_argument('--samples', type=int)
            sub.add_argument('--json', action='store_true')

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get('verbosity'))
        if level is not None:
            app_logger.setLevel(level)

        form = CommandRequestForm(data={
            'command': options['subcommand'],
            'algebra': options.get('algebra') or '',
            'files': '\n'.join(options.get('files') or ()),
            'path': options.get('path') or '',
            'omega': options.get('omega') or '',
            'complex_pairs': options.get('complex_pairs') or '',
            'basis': options.get('basis') or '',
            'names': options.get('names') or '',
            'degree': options.get('degree'),
            'seed': options.get('seed'),
            'samples': options.get('samples'),
            'json': options.get('json'),
        })
        if not form.is_valid():
            raise CommandError(form.errors.as_text(), returncode=UsageError.exit_code)
        request = form.cleaned_data

        handler = getattr(self, 'handle_' + request['command'].replace('-', '_'))
        logger.info("running %s", request['command'])
        try:
            template, context, document = handler(request)
        except LefschetzError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        if request['json']:
            self.stdout.write(json.dumps(document, cls=DjangoJSONEncoder, indent=2, sort_keys=True))
        else:
            self.stdout.write(render_to_string(f'lefschetz/{template}.txt', context).rstrip('\n'))
        logger.info("finished %s", request['command'])

    # --- Shared lookups ---

    def _entry(self, request):
        return resolve_entry(request['algebra'])

    def _structure(self, entry, request):
        return SymplecticStructure.from_form(entry.algebra, entry.omega_form(request['omega']))

    def _complex_structure(self, entry, request):
        return AlmostComplexStructure.from_pairs(entry.algebra.dim, entry.pairs(request['complex_pairs']))

    def _family(self, entry, request):
        forms, names = entry.family_forms(request['basis'], request['names'])
        return generic_family(entry.algebra, forms, names)

    def _seed(self, request):
        return settings.LEFSCHETZ_SEED if request['seed'] is None else request['seed']

    # --- Subcommands ---

    def handle_list(self, request):
        entries = [catalog_entry(name) for name in catalog_names()]
        document = [
            {
                'name': entry.name,
                'dim': entry.algebra.dim,
                'cohomology': entry.cohomology_label,
                'omega': entry.omega,
                'description': entry.description,
            }
            for entry in entries
        ]
        return 'list', {'entries': entries}, document

    def handle_betti(self, request):
        entry = self._entry(request)
        numbers = betti_numbers(entry.algebra)
        document = {'algebra': entry.name, 'cohomology': entry.cohomology_label, 'betti': list(numbers)}
        return 'betti', {'entry': entry, 'betti': numbers}, document

    def handle_cohomology(self, request):
        entry = self._entry(request)
        dim = entry.algebra.dim
        degree = request['degree']
        if degree is not None and degree > dim:
            raise UsageError(f"degree {degree} exceeds dimension {dim}")
        degrees = [degree] if degree is not None else range(dim + 1)
        groups = [(k, cohomology_basis(entry.algebra, k).representatives) for k in degrees]
        document = {
            'algebra': entry.name,
            'cohomology': {str(k): [render_form(rep) for rep in reps] for k, reps in groups},
        }
        return 'cohomology', {'entry': entry, 'groups': groups}, document

    def handle_hlc(self, request):
        entry = self._entry(request)
        structure = self._structure(entry, request)
        report = hlc_check(entry.algebra, structure)
        return 'hlc', {'entry': entry, 'report': report}, report.to_dict()

    def handle_ddlambda(self, request):
        entry = self._entry(request)
        structure = self._structure(entry, request)
        degrees = [(k, ddlambda_lemma_check(structure, k)) for k in range(entry.algebra.dim + 1)]
        document = {
            'algebra': entry.name,
            'omega': render_form(structure.omega),
            'degrees': {str(k): holds for k, holds in degrees},
            'holds': all(holds for _, holds in degrees),
        }
        return 'ddlambda', {'entry': entry, 'document': document, 'degrees': degrees}, document

    def handle_audit(self, request):
        entry = self._entry(request)
        report = equivalence_audit(self._structure(entry, request))
        return 'audit', {'entry': entry, 'report': report}, report.to_dict()

    def handle_jinv(self, request):
        entry = self._entry(request)
        structure = self._structure(entry, request)
        J = self._complex_structure(entry, request)
        groups = j_invariant_cohomology(entry.algebra, J, structure)
        primitive = primitive_j_cohomology(entry.algebra, J, structure)
        document = {
            'algebra': entry.name,
            'h_plus': groups.h_plus.dimension,
            'h_minus': groups.h_minus.dimension,
            'h_plus_primitive': primitive.dimension,
            'pure_and_full': groups.pure_and_full,
            'representatives': {
                'plus': [render_form(rep) for rep in groups.h_plus.representatives],
                'minus': [render_form(rep) for rep in groups.h_minus.representatives],
                'plus_primitive': [render_form(rep) for rep in primitive.representatives],
            },
        }
        context = {'entry': entry, 'groups': groups, 'primitive': primitive}
        return 'jinv', context, document

    def handle_lejmi(self, request):
        entry = self._entry(request)
        structure = self._structure(entry, request)
        triple = compatibility_check(self._complex_structure(entry, request), structure)
        if triple is None:
            raise PreconditionError(f"J is not compatible with {render_form(structure.omega)}")
        report = almost_kaehler_report(triple)
        return 'lejmi', {'entry': entry, 'report': report}, report.to_dict()

    def handle_param_hlc(self, request):
        entry = self._entry(request)
        certificate = hlc_everywhere(
            self._family(entry, request), seed=self._seed(request), samples=request['samples'],
        )
        return 'param_hlc', {'entry': entry, 'certificate': certificate}, certificate.to_dict()

    def handle_validate(self, request):
        source = request['algebra']
        if looks_like_file(source):
            algebra = read_presentation(source)
        else:
            algebra = catalog_entry(source).algebra
        diagnostics = validate(algebra)
        document = {
            'algebra': algebra.name,
            'jacobi_ok': diagnostics.jacobi_ok,
            'unimodular': diagnostics.unimodular,
            'messages': diagnostics.messages,
        }
        if not diagnostics.jacobi_ok:
            generator = diagnostics.jacobi_failures[0]
            raise AlgebraLoadError(
                f"{source}: Jacobi violation at generator {generator}", generator=generator,
            )
        return 'validate', {'algebra': algebra, 'diagnostics': diagnostics}, document

    def handle_export(self, request):
        entry = self._entry(request)
        save_algebra(entry, request['path'])
        document = {'algebra': entry.name, 'path': request['path']}
        return 'export', document, document

    def handle_brylinski(self, request):
        entry = self._entry(request)
        structure = self._structure(entry, request)
        dim = entry.algebra.dim
        rows = []
        for k in range(dim + 1):
            tseng_yau = tseng_yau_cohomology(structure, k)
            rows.append({
                'degree': k,
                'brylinski': brylinski_cohomology(structure, k).dimension,
                'dual_betti': betti(entry.algebra, dim - k),
                'bott_chern': tseng_yau.dim_bott_chern,
                'aeppli': tseng_yau.dim_aeppli,
                'bc_injective': tseng_yau.map_to_dR_injective,
                'bc_aeppli_iso': tseng_yau.bc_to_aeppli_iso,
            })
        document = {
            'algebra': entry.name,
            'omega': render_form(structure.omega),
            'degrees': {str(row['degree']): {k: v for k, v in row.items() if k != 'degree'} for row in rows},
        }
        return 'brylinski', {'entry': entry, 'omega': document['omega'], 'rows': rows}, document

    def handle_explore(self, request):
        results = [self._explore_one(path, request) for path in request['files']]
        return 'explore', {'results': results}, results

    def _explore_one(self, path, request):
        entry = load_entry(path)
        result = {
            'algebra': entry.name,
            'path': path,
            'completely_solvable': entry.algebra.completely_solvable,
            'hlc_at_default': None,
            'verdict': None,
        }
        if entry.omega:
            try:
                result['hlc_at_default'] = hlc_check(
                    entry.algebra, self._structure(entry, {'omega': None}),
                ).verdict
            except PreconditionError as exc:
                result['note'] = str(exc)
        try:
            certificate = hlc_everywhere(
                self._family(entry, {'basis': None, 'names': None}),
                seed=self._seed(request), samples=request['samples'],
            )
        except PreconditionError as exc:
            result['status'] = 'no family'
            result['note'] = str(exc)
            return result

        Verdict = HLCVerdict.Verdict
        verdict = certificate.verdict.kind
        result['verdict'] = str(verdict)
        result['evidence'] = certificate.verdict.evidence
        if verdict == Verdict.MIXED:
            result['status'] = (
                'potential counterexample' if entry.algebra.completely_solvable else 'inconsistent'
            )
            logger.warning("%s: HLC holds at some symplectic members only", entry.name)
        elif verdict in (Verdict.EVERYWHERE_HLC, Verdict.NOWHERE_HLC):
            result['status'] = 'consistent'
        elif verdict == Verdict.SAMPLED_CONSISTENT:
            result['status'] = 'consistent on samples'
        else:
            result['status'] = 'undecided'
        return result

    def handle_cup(self, request):
        entry = self._entry(request)
        family = self._family(entry, request)
        degree = request['degree']
        if degree + 2 > entry.algebra.dim:
            raise UsageError(f"H^{degree + 2} is out of range for dimension {entry.algebra.dim}")
        rows, source, target = cup_rows(family, degree)
        document = {
            'algebra': entry.name,
            'parameters': list(family.names),
            'degree': degree,
            'source_dimension': source,
            'target_dimension': target,
            'rows': [[render_coefficient(value) for value in row] for row in rows],
        }
        return 'cup', {'entry': entry, 'document': document, 'rows': rows}, document
