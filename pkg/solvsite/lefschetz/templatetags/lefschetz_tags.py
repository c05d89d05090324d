from django import template

from ..exterior import render_form
from ..scalarring import render_coefficient

register = template.Library()


@register.filter(name='form')
def form_text(form):
    return render_form(form)


@register.filter
def truth(value):
    """true / false, matching the JSON output."""
    return 'true' if value else 'false'


@register.filter
def spaced(values):
    return ' '.join(str(value) for value in values)


@register.simple_tag
def matrix_row(row):
    return '[ ' + ', '.join(render_coefficient(entry) for entry in row) + ' ]'
