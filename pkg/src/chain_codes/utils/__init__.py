"""
    Miscellaneous utility classes and functions.
"""


class Location:
    """
        A position inside a text payload (matrix, set or polynomial), used
        to point at the offending character when parsing fails.
    """

    @classmethod
    def location_from_pos(cls, src, pos, name=None):
        loc = Location(src, name=name)
        for c in src[:pos]:
            if c == '\n':
                loc._newline()
            else:
                loc._inc_pos()
        return loc

    def __init__(self, src='', name=None, ln=0, col=0, pos=0):
        self._src = src
        self._name = name
        self._ln = ln
        self._col = col
        self._pos = pos

    @property
    def line(self):
        return self._ln

    @property
    def column(self):
        return self._col

    @property
    def pos(self):
        return self._pos

    def _inc_pos(self, delta=1):
        self._pos += delta
        self._col += delta

    def _newline(self):
        self._pos += 1
        self._ln += 1
        self._col = 0

    def clone(self):
        return Location(self._src, name=self._name, ln=self._ln, col=self._col, pos=self._pos)

    def context(self, num_ctx_lines=2):
        ln = self.line
        col = self.column
        src_lines = self._src.split('\n')

        # A single line payload needs no line numbers
        if len(src_lines) < 2:
            return ["src: "+self._src, "     "+" "*col+"^"]

        start_ctx = max(ln-num_ctx_lines, 0)
        end_ctx = min(ln+num_ctx_lines+1, len(src_lines))
        width = len(str(end_ctx))

        ret = []
        for i in range(start_ctx, end_ctx):
            marker = '> ' if i == ln else '  '
            ret.append(marker+str(i).ljust(width+1)+src_lines[i])
            if i == ln:
                ret.append('  '+' '*(width+1)+' '*col+'^')
        return ret

    def __str__(self):
        ret = '{ln}, {col}'.format(ln=self.line, col=self.column)
        if self._name is not None:
            ret += " ("+self._name+")"
        return ret

    def __repr__(self):
        return str(self)
