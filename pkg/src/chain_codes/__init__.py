"""
    chain_codes
    ~~~~~~~~~~~

    Exact linear and cyclic codes over finite chain rings and their
    unramified Galois extensions.

    :copyright: (c) 2017 Jonathan L. Verner, (c) the chain-codes authors.
    :license: MIT, see LICENSE for more details.
"""
from . import utils
from .ring import Family, make_ring
from .extension import Tower, extend
from .codes import Code, code_from_generators
from .cyclic import cyclic_context
