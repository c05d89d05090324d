"""
Parser for form expressions such as ``e14 + e23`` or ``e12 + 2*e34 - 1/3*e56``.

    expr  := term (("+" | "-") term)*
    term  := [sign] [coeff "*"] basis
    coeff := integer | integer "/" integer
    basis := "e" digits            (dimension up to 9, one digit per index)
           | "e{" i ("," i)* "}"   (any dimension; required above 9)

Whitespace is ignored and every term must have the same degree.
"""
import logging
import re
from dataclasses import dataclass

from .exceptions import FormExpressionError, ScalarFormatError
from .exterior import Form, render_form
from .scalarring import parse_scalar

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r'\s*(?:'
    r'(?P<braced>e\{[^}]*\})'
    r'|(?P<digits>e\d+)'
    r'|(?P<rational>\d+\s*/\s*\d+|\d+)'
    r'|(?P<op>[+\-*])'
    r'|(?P<junk>\S)'
    r')'
)


@dataclass(frozen=True, eq=False)
class FormExpression:
    text: str
    form: Form

    def __str__(self):
        return render_form(self.form)


def _tokens(text):
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        kind = match.lastgroup
        value = match.group(kind)
        if kind == 'junk':
            raise FormExpressionError(f"unexpected {value!r} at position {match.start(kind)}", text)
        yield kind, value
        position = match.end()


def _basis_indices(kind, value, dim, text):
    if kind == 'digits':
        if dim > 9:
            raise FormExpressionError(
                f"{value}: dimension {dim} needs the braces form e{{i,j,...}}", text
            )
        pieces = list(value[1:])
    else:
        pieces = [piece.strip() for piece in value[2:-1].split(',')]
    indices = []
    for piece in pieces:
        if not piece.isdigit():
            raise FormExpressionError(f"{value}: {piece!r} is not an index", text)
        index = int(piece)
        if not 1 <= index <= dim:
            raise FormExpressionError(f"index {index} in {value} out of range 1..{dim}", text)
        indices.append(index)
    return tuple(indices)


def parse_form_expression(text, algebra):
    """
    Parses ``text`` into a homogeneous rational form on ``algebra`` (or on a
    bare dimension).

    Returns:
        FormExpression
    """
    dim = getattr(algebra, 'dim', algebra)
    tokens = list(_tokens(text))
    if not tokens:
        raise FormExpressionError("empty form expression", text)

    terms = []
    position = 0
    expect_term = True
    sign = 1
    while position < len(tokens):
        kind, value = tokens[position]
        if not expect_term:
            if kind != 'op' or value == '*':
                raise FormExpressionError(f"expected '+' or '-' before {value!r}", text)
            sign = 1 if value == '+' else -1
            expect_term = True
            position += 1
            continue

        if kind == 'op' and value in '+-' and not terms and sign == 1 and position == 0:
            sign = 1 if value == '+' else -1
            position += 1
            continue

        coefficient = None
        if kind == 'rational':
            try:
                coefficient = parse_scalar(value)
            except ScalarFormatError as exc:
                raise FormExpressionError(str(exc), text) from None
            if tokens[position + 1:position + 2] != [('op', '*')]:
                raise FormExpressionError(f"expected '*' after coefficient {value}", text)
            position += 2
            if position >= len(tokens):
                raise FormExpressionError("expression ends after '*'", text)
            kind, value = tokens[position]
        if kind not in ('digits', 'braced'):
            raise FormExpressionError(f"expected a basis monomial, got {value!r}", text)
        indices = _basis_indices(kind, value, dim, text)
        terms.append((sign, coefficient, indices))
        position += 1
        expect_term = False
        sign = 1

    if expect_term:
        raise FormExpressionError("expression ends with an operator", text)

    degrees = {len(indices) for _, _, indices in terms}
    if len(degrees) > 1:
        raise FormExpressionError(
            f"non-homogeneous expression: degrees {', '.join(str(d) for d in sorted(degrees))}", text
        )
    degree = degrees.pop()
    form = Form.zero(dim, degree)
    for sign, coefficient, indices in terms:
        monomial = Form.monomial(dim, indices, coefficient)
        form = form + (monomial if sign > 0 else -monomial)
    logger.debug("parsed %r as %s", text, render_form(form))
    return FormExpression(text, form)


def parse_form(text, algebra):
    return parse_form_expression(text, algebra).form
