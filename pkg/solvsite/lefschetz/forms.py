# Django's forms module validates the options of every subcommand.
from django import forms
from django.db import models


class Command(models.TextChoices):
    """The subcommands of ``manage.py lefschetz``."""
    LIST = 'list', 'List catalog algebras'
    BETTI = 'betti', 'Betti numbers'
    COHOMOLOGY = 'cohomology', 'Cohomology representatives'
    HLC = 'hlc', 'Hard Lefschetz check'
    DDLAMBDA = 'ddlambda', 'ddΛ-lemma per degree'
    AUDIT = 'audit', 'Five-way equivalence audit'
    JINV = 'jinv', 'J-invariant cohomology'
    LEJMI = 'lejmi', 'Lejmi operator kernel'
    PARAM_HLC = 'param-hlc', 'HLC over the symplectic family'
    VALIDATE = 'validate', 'Validate structure equations'
    EXPORT = 'export', 'Write an algebra file'
    BRYLINSKI = 'brylinski', 'Brylinski and Tseng-Yau groups'
    EXPLORE = 'explore', 'Explore algebra files'
    CUP = 'cup', 'Cup product with the family form'


# Subcommands that operate on one algebra.
ALGEBRA_COMMANDS = {choice for choice in Command.values if choice not in (Command.LIST, Command.EXPLORE)}


class ComplexPairsField(forms.CharField):
    """``"1,2;3,4"`` -> ((1, 2), (3, 4))."""

    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return None
        pairs = []
        for chunk in value.split(';'):
            pieces = [piece.strip() for piece in chunk.split(',')]
            if len(pieces) != 2 or not all(piece.isdigit() for piece in pieces):
                raise forms.ValidationError(f"{chunk!r} is not a pair 'a,b'", code='invalid')
            pairs.append((int(pieces[0]), int(pieces[1])))
        return tuple(pairs)


class SeparatedListField(forms.CharField):
    """Splits on ``separator`` and drops empty pieces."""

    def __init__(self, *, separator, **kwargs):
        self.separator = separator
        super().__init__(**kwargs)

    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return None
        pieces = [piece.strip() for piece in value.split(self.separator)]
        if not all(pieces):
            raise forms.ValidationError(f"empty entry in {value!r}", code='invalid')
        return tuple(pieces)


class CommandRequestForm(forms.Form):
    command = forms.ChoiceField(choices=Command.choices)
    algebra = forms.CharField(required=False)
    # explore takes files, export a target path.
    files = SeparatedListField(separator='\n', required=False)
    path = forms.CharField(required=False)

    # --- Structures ---
    omega = forms.CharField(required=False)
    complex_pairs = ComplexPairsField(required=False)
    basis = SeparatedListField(separator=';', required=False)
    names = SeparatedListField(separator=',', required=False)

    # --- Numbers ---
    degree = forms.IntegerField(required=False, min_value=0)
    seed = forms.IntegerField(required=False)
    samples = forms.IntegerField(required=False, min_value=0)

    json = forms.BooleanField(required=False)

    def clean(self):
        cleaned = super().clean()
        command = cleaned.get('command')
        if command in ALGEBRA_COMMANDS and not cleaned.get('algebra'):
            self.add_error('algebra', f"{command} needs an algebra name or file")
        if command == Command.EXPLORE and not cleaned.get('files'):
            self.add_error('files', "explore needs at least one algebra file")
        if command == Command.EXPORT and not cleaned.get('path'):
            self.add_error('path', "export needs a target path")
        if command == Command.CUP and cleaned.get('degree') is None:
            self.add_error('degree', "cup needs --degree")
        basis, names = cleaned.get('basis'), cleaned.get('names')
        if basis and names and len(basis) != len(names):
            self.add_error('names', f"{len(names)} names for {len(basis)} basis forms")
        return cleaned
