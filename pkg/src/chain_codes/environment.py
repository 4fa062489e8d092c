"""
    chain_codes.environment
    ~~~~~~~~~~~~~~~~~~~~~~~

    Provides a class that holds runtime options: the size guards used by
    the enumeration based operations and the seed of randomized checks.

    :copyright: (c) 2017 Jonathan L. Verner, (c) the chain-codes authors.
    :license: MIT, see LICENSE for more details.
"""
import random

from . import defaults
from . import exceptions


class Environment:
    def __init__(self,
                 guard_bits=defaults.GUARD_BITS,
                 weight_guard_bits=defaults.WEIGHT_GUARD_BITS,
                 span_check_bits=defaults.SPAN_CHECK_BITS,
                 seed=defaults.SEED,
                 cases=None):
        self.guard_bits = guard_bits
        self.weight_guard_bits = weight_guard_bits
        self.span_check_bits = span_check_bits
        self.seed = seed
        self.cases = cases

    def clone(self, **overrides):
        opts = {
            'guard_bits': self.guard_bits,
            'weight_guard_bits': self.weight_guard_bits,
            'span_check_bits': self.span_check_bits,
            'seed': self.seed,
            'cases': self.cases,
        }
        opts.update(overrides)
        return Environment(**opts)

    def cases_for(self, suite):
        """The random case count of `suite`; an explicit `cases` overrides the per-suite default."""
        if self.cases is not None:
            return self.cases
        return defaults.SUITE_CASES.get(suite, defaults.CASES)

    def check_size(self, size, what, bits=None):
        """
            Raises :class:`SizeGuardExceeded` when `size` exceeds ``2**bits``
            (``bits`` defaults to the general guard).
        """
        if bits is None:
            bits = self.guard_bits
        if size > 2**bits:
            raise exceptions.SizeGuardExceeded(
                "{} has {} elements, the guard allows at most 2^{}".format(what, size, bits),
                size=size, bits=bits)

    def within(self, size, bits=None):
        if bits is None:
            bits = self.span_check_bits
        return size <= 2**bits

    def rng(self, salt=0):
        return random.Random(self.seed * 1000003 + salt)


default_env = Environment()
