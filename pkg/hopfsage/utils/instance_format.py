"""Line-oriented instance files.

    field Q                       # or: field F 2
    hopf KC2 dim 2
    unit 1 1
    mult 2 2 1 1                  # e_2 e_2 has coefficient 1 at e_1
    algebra A4 over KC2 dim 4
    coaction 2 2 2 1              # rho(e_2) has coefficient 1 at e_2 (x) h_2
    module M2 over A4 dim 2
    action 2 1 2 1                # e_2 . m_1 has coefficient 1 at m_2
    bmodule P over A4 dim 1       # B acts through the coinvariant basis of A

Indices are 1-based, unspecified entries are zero and ``#`` starts a
comment. Only syntax is checked here; names and index ranges are resolved
by the instance service.
"""
import re
from typing import List, Tuple
from hopfsage.models.field import Field
from hopfsage.models.instance import BLOCK_TABLES, Block, InstanceFile
from hopfsage.utils.errors import FieldError, ParseError

_TOKEN = re.compile(r'\S+')

Token = Tuple[str, int]


def _tokens(line: str) -> List[Token]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _integer(token: Token, number: int, minimum: int = 0) -> int:
    text, column = token
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got '{text}'", number, column)
    if value < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {value}",
                         number, column)
    return value


def _parse_field(tokens: List[Token], number: int) -> Field:
    if len(tokens) == 2 and tokens[1][0] == 'Q':
        return Field.rationals()
    if len(tokens) == 3 and tokens[1][0] == 'F':
        p = _integer(tokens[2], number, 2)
        try:
            return Field.prime(p)
        except FieldError as e:
            raise ParseError(e.message, number, tokens[2][1])
    column = tokens[1][1] if len(tokens) > 1 else tokens[0][1]
    raise ParseError("expected 'field Q' or 'field F <p>'", number, column)


def _expect(tokens: List[Token], position: int, word: str, number: int):
    if len(tokens) <= position or tokens[position][0] != word:
        column = tokens[min(position, len(tokens) - 1)][1]
        raise ParseError(f"expected '{word}'", number, column)


def _parse_header(tokens: List[Token], number: int) -> Block:
    kind = tokens[0][0]
    if kind == 'hopf':
        if len(tokens) != 4:
            raise ParseError("expected 'hopf <name> dim <n>'",
                             number, tokens[0][1])
        _expect(tokens, 2, 'dim', number)
        return Block(kind, tokens[1][0], _integer(tokens[3], number),
                     line=number)
    if len(tokens) != 6:
        raise ParseError(f"expected '{kind} <name> over <algebra> dim <n>'",
                         number, tokens[0][1])
    _expect(tokens, 2, 'over', number)
    _expect(tokens, 4, 'dim', number)
    return Block(kind, tokens[1][0], _integer(tokens[5], number),
                 parent=tokens[3][0], line=number)


def _parse_entry(field: Field, block: Block, tokens: List[Token],
                 number: int):
    keyword, column = tokens[0]
    arities = BLOCK_TABLES[block.kind]
    if keyword not in arities:
        raise ParseError(f"unknown keyword '{keyword}' in {block.kind} block "
                         f"'{block.name}'", number, column)
    arity = arities[keyword]
    if len(tokens) != arity + 2:
        extra = tokens[min(len(tokens), arity + 2) - 1][1]
        raise ParseError(f"'{keyword}' takes {arity} indices and a scalar",
                         number, extra)
    index = tuple(_integer(t, number, 1) - 1 for t in tokens[1:arity + 1])
    text, scalar_column = tokens[-1]
    try:
        value = field.parse(text)
    except FieldError as e:
        raise ParseError(e.message, number, scalar_column)
    if index in block.get(keyword):
        raise ParseError(f"duplicate '{keyword}' entry", number, column)
    block.put(keyword, index, value)


def parse(text: str) -> InstanceFile:
    """Parse instance text; raises ParseError with line and column."""
    instance = None
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw.split('#', 1)[0])
        if not tokens:
            continue
        word, column = tokens[0]
        if instance is None:
            if word != 'field':
                raise ParseError("expected 'field Q' or 'field F <p>'",
                                 number, column)
            instance = InstanceFile(_parse_field(tokens, number))
            continue
        if word == 'field':
            raise ParseError("duplicate field declaration", number, column)
        if word in BLOCK_TABLES:
            current = _parse_header(tokens, number)
            instance.blocks.append(current)
            continue
        if current is None:
            raise ParseError(f"'{word}' outside of a block", number, column)
        _parse_entry(instance.field, current, tokens, number)
    if instance is None:
        raise ParseError("empty instance file", 1, 1)
    return instance


def serialize(instance: InstanceFile) -> str:
    """Canonical text: blocks in order, entries sorted, zeros omitted."""
    field = instance.field
    lines = [field.header()]
    for block in instance.blocks:
        lines.append('')
        if block.kind == 'hopf':
            lines.append(f"hopf {block.name} dim {block.dim}")
        else:
            lines.append(f"{block.kind} {block.name} over {block.parent} "
                         f"dim {block.dim}")
        for keyword in BLOCK_TABLES[block.kind]:
            table = block.get(keyword)
            for index in sorted(table):
                indices = ' '.join(str(i + 1) for i in index)
                lines.append(f"{keyword} {indices} "
                             f"{field.format(table[index])}")
    return '\n'.join(lines) + '\n'
