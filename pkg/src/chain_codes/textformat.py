"""
    chain_codes.textformat
    ~~~~~~~~~~~~~~~~~~~~~~

    Parsing and printing of the text payloads accepted on the command
    line: matrices, defining sets, polynomials and multi-indices.

    An element is written as a single integer (its image under the
    canonical map ``Z -> R``) or as its comma separated flattened
    coefficients. Matrix entries are separated by whitespace and rows by
    ``;`` or a newline.
"""
from typing import Dict, List, NewType, Optional, Tuple

from . import exceptions
from .linalg import Mat
from .poly import Polynomial
from .ring import Element, RingSpec
from .utils import Location

TokenT = NewType('TokenT', int)

T_INT = TokenT(0)
T_COMMA = TokenT(1)
T_SEMICOLON = TokenT(2)
T_NEWLINE = TokenT(3)
T_SPACE = TokenT(4)
T_LBRACE = TokenT(5)
T_RBRACE = TokenT(6)
T_COLON = TokenT(7)
T_OTHER = TokenT(8)
T_EOS = TokenT(9)

TOKEN_NAMES = {
    T_INT: 'INTEGER',
    T_COMMA: 'COMMA',
    T_SEMICOLON: 'SEMICOLON',
    T_NEWLINE: 'NEW LINE',
    T_SPACE: 'WHITESPACE',
    T_LBRACE: 'LEFT BRACE',
    T_RBRACE: 'RIGHT BRACE',
    T_COLON: 'COLON',
    T_OTHER: 'OTHER',
    T_EOS: 'END OF STREAM',
}

_PUNCTUATION = {
    ',': T_COMMA,
    ';': T_SEMICOLON,
    '\n': T_NEWLINE,
    '{': T_LBRACE,
    '}': T_RBRACE,
    ':': T_COLON,
}


def token_repr(tok):
    return TOKEN_NAMES.get(tok, 'UNKNOWN TOKEN')


class TokenStream:
    """A stream of ``(token, value, location)`` triples; runs of spaces and tabs collapse to one token."""

    def __init__(self, src: str, name: Optional[str] = None) -> None:
        self.src = src
        self.loc = Location(src, name=name)
        self.left = []  # type: List[Tuple[TokenT, str, Location]]

    def peek(self):
        tok = next(self)
        self.left.insert(0, tok)
        return tok

    def error(self, message, loc):
        return exceptions.PayloadSyntaxError(message, src=self.src, location=loc)

    def expect(self, token):
        tok, val, loc = next(self)
        if tok != token:
            raise self.error("expected {}, found {}".format(token_repr(token), val or token_repr(tok)), loc)
        return val

    def skip_spaces(self):
        while self.peek()[0] == T_SPACE:
            next(self)

    def _scan(self, pred):
        start = self.loc.pos
        while self.loc.pos < len(self.src) and pred(self.src[self.loc.pos]):
            self.loc._inc_pos()
        return self.src[start:self.loc.pos]

    def __iter__(self):
        return self

    def __next__(self):
        if self.left:
            return self.left.pop(0)
        old_loc = self.loc.clone()
        if self.loc.pos >= len(self.src):
            return (T_EOS, '', old_loc)
        c = self.src[self.loc.pos]
        if c in _PUNCTUATION:
            if c == '\n':
                self.loc._newline()
            else:
                self.loc._inc_pos()
            return (_PUNCTUATION[c], c, old_loc)
        if c in ' \t\r':
            return (T_SPACE, self._scan(lambda ch: ch in ' \t\r'), old_loc)
        if c.isdigit() or c == '-':
            self.loc._inc_pos()
            val = c + self._scan(str.isdigit)
            if val == '-':
                raise self.error("a minus sign must be followed by digits", old_loc)
            return (T_INT, val, old_loc)
        self.loc._inc_pos()
        return (T_OTHER, c, old_loc)


def _parse_ints(stream: TokenStream) -> Tuple[List[int], Location]:
    """A comma separated run of integers."""
    tok, val, loc = next(stream)
    if tok != T_INT:
        raise stream.error("expected an integer, found {}".format(val or token_repr(tok)), loc)
    ints = [int(val)]
    while stream.peek()[0] == T_COMMA:
        next(stream)
        ints.append(int(stream.expect(T_INT)))
    return ints, loc


def _to_element(ring: RingSpec, ints: List[int], stream: TokenStream, loc: Location) -> Element:
    if len(ints) == 1:
        return ring.from_int(ints[0])
    try:
        return ring.from_key(ints)
    except exceptions.MalformedElement as ex:
        raise stream.error(ex.message, loc)


def parse_element(ring: RingSpec, src: str) -> Element:
    stream = TokenStream(src.strip(), name='element')
    ints, loc = _parse_ints(stream)
    stream.expect(T_EOS)
    return _to_element(ring, ints, stream, loc)


def parse_matrix(ring: RingSpec, src: str) -> Mat:
    """
        Parses a matrix over `ring`. Empty rows are skipped; all remaining
        rows must have the same number of entries.
    """
    stream = TokenStream(src, name='matrix')
    rows = []  # type: List[List[Element]]
    row = []  # type: List[Element]
    row_loc = stream.loc.clone()
    while True:
        tok, val, loc = stream.peek()
        if tok == T_SPACE:
            next(stream)
        elif tok in (T_SEMICOLON, T_NEWLINE, T_EOS):
            next(stream)
            if row:
                if rows and len(row) != len(rows[0]):
                    raise stream.error("row {} has {} entries, expected {}".format(
                        len(rows), len(row), len(rows[0])), row_loc)
                rows.append(row)
            row = []
            row_loc = stream.loc.clone()
            if tok == T_EOS:
                break
        else:
            ints, loc = _parse_ints(stream)
            row.append(_to_element(ring, ints, stream, loc))
            if stream.peek()[0] not in (T_SPACE, T_SEMICOLON, T_NEWLINE, T_EOS):
                tok, val, loc = next(stream)
                raise stream.error("unexpected {}".format(val or token_repr(tok)), loc)
    if not rows:
        raise stream.error("the matrix has no rows", stream.loc.clone())
    return Mat(ring, rows)


def parse_set(src: str) -> List[int]:
    """Parses ``{1,2,4}``, ``1 2 4`` or ``1,2,4``; ``{}`` is the empty set."""
    stream = TokenStream(src.strip(), name='set')
    braced = stream.peek()[0] == T_LBRACE
    if braced:
        next(stream)
    members = []
    while True:
        tok, val, loc = next(stream)
        if tok in (T_SPACE, T_COMMA):
            continue
        if tok == T_INT:
            members.append(int(val))
        elif braced and tok == T_RBRACE:
            stream.skip_spaces()
            stream.expect(T_EOS)
            break
        elif not braced and tok == T_EOS:
            break
        else:
            raise stream.error("unexpected {} in a set".format(val or token_repr(tok)), loc)
    return sorted(set(members))


def parse_poly(ring: RingSpec, src: str) -> Polynomial:
    """Coefficients separated by whitespace or ``;``, constant term first."""
    mat = parse_matrix(ring, src.replace(';', ' '))
    return Polynomial(ring, mat.rows[0])


def parse_multiindex(src: str) -> Dict[int, int]:
    """Parses ``a:t`` pairs separated by whitespace or commas."""
    stream = TokenStream(src.strip(), name='multi-index')
    levels = {}  # type: Dict[int, int]
    while True:
        tok, val, loc = next(stream)
        if tok in (T_SPACE, T_COMMA):
            continue
        if tok == T_EOS:
            break
        if tok != T_INT:
            raise stream.error("expected a representative, found {}".format(val or token_repr(tok)), loc)
        stream.expect(T_COLON)
        t = int(stream.expect(T_INT))
        a = int(val)
        if a in levels:
            raise stream.error("the representative {} is given twice".format(a), loc)
        levels[a] = t
    return levels


def format_matrix(mat: Mat) -> str:
    """Aligned rows, one per line."""
    cells = [[e.text() for e in row] for row in mat.rows]
    if not cells:
        return ''
    width = max(len(c) for row in cells for c in row)
    return '\n'.join(' '.join(c.rjust(width) for c in row) for row in cells)


def format_set(members) -> str:
    return '{' + ','.join(str(a) for a in sorted(members)) + '}'


def format_poly(poly: Polynomial) -> str:
    if poly.is_zero():
        return '0'
    return ' '.join(c.text() for c in poly.coeffs)
