from chain_codes.codes import code_from_generators
from chain_codes.fixtures import fixture
from chain_codes.textformat import parse_element, parse_matrix


def code(name, src):
    """The code over the fixture `name` spanned by the rows of the matrix `src`."""
    tower = fixture(name)
    return code_from_generators(tower, parse_matrix(tower.top, src))


def elt(name, src):
    return parse_element(fixture(name).top, src)
