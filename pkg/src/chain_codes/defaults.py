"""
    chain_codes.defaults
    ~~~~~~~~~~~~~~~~~~~~

    Default runtime options (enumeration guards, seeds, logging).

    :copyright: (c) 2017 Jonathan L. Verner, (c) the chain-codes authors.
    :license: MIT, see LICENSE for more details.
"""

# guards, given as powers of two
GUARD_BITS = 24
WEIGHT_GUARD_BITS = 22
SPAN_CHECK_BITS = 16

# rings up to 2^PRODUCT_TABLE_BITS elements memoize their products,
# rings up to 2^ELEMENT_MEMO_BITS elements their inverses and θ-adic digits
PRODUCT_TABLE_BITS = 8
ELEMENT_MEMO_BITS = 16

# randomized verification
SEED = 0
CASES = 100
SUITE_CASES = {
    'rsf': 1000,
    'dual': 500,
    'delsarte': 300,
    'closure': 300,
    'bounds': 500,
}
TRANSFORMS = 200
MAX_GENERATORS = 4
MAX_LENGTH = 6

# logging
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_LEVEL = 'WARNING'
