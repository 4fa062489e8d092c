"""
    chain_codes.sampling
    ~~~~~~~~~~~~~~~~~~~~

    Seeded random ring elements, matrices and codes for the
    verification suites.
"""
import functools
import random
from typing import List, Optional, Tuple

from . import defaults
from .codes import Code, code_from_generators
from .extension import Tower
from .linalg import Mat
from .ring import Element, RingSpec


@functools.lru_cache(maxsize=None)
def _elements(ring: RingSpec) -> Tuple[Element, ...]:
    return tuple(ring.elements())


@functools.lru_cache(maxsize=None)
def _units(ring: RingSpec) -> Tuple[Element, ...]:
    return tuple(e for e in _elements(ring) if e.is_unit())


def random_element(ring: RingSpec, rng: random.Random) -> Element:
    return rng.choice(_elements(ring))


def random_unit(ring: RingSpec, rng: random.Random) -> Element:
    return rng.choice(_units(ring))


def random_matrix(ring: RingSpec, nrows: int, ncols: int, rng: random.Random, sparsity: float = 0.0) -> Mat:
    """A matrix with independent uniform entries; with `sparsity` > 0 that share of entries is zero."""
    def entry():
        if sparsity and rng.random() < sparsity:
            return ring.zero
        return random_element(ring, rng)
    return Mat(ring, [[entry() for _ in range(ncols)] for _ in range(nrows)], ncols)


def random_invertible(ring: RingSpec, n: int, rng: random.Random, steps: Optional[int] = None) -> Mat:
    """A product of random elementary row operations: unit scalings, transvections and swaps."""
    rows = [list(r) for r in Mat.identity(ring, n).rows]
    for _ in range(steps if steps is not None else 3 * n):
        op = rng.randrange(3)
        i = rng.randrange(n)
        if op == 0:
            u = random_unit(ring, rng)
            rows[i] = [u * e for e in rows[i]]
        elif n > 1:
            j = rng.choice([k for k in range(n) if k != i])
            if op == 1:
                f = random_element(ring, rng)
                rows[i] = [a + f * b for a, b in zip(rows[i], rows[j])]
            else:
                rows[i], rows[j] = rows[j], rows[i]
    return Mat(ring, rows, n)


def random_shape(rng: random.Random, max_rows: int = defaults.MAX_GENERATORS,
                 max_length: int = defaults.MAX_LENGTH) -> Tuple[int, int]:
    return rng.randint(1, max_rows), rng.randint(1, max_length)


def random_code(tower: Tower, rng: random.Random, length: Optional[int] = None,
                max_rows: int = defaults.MAX_GENERATORS) -> Code:
    """
        A code spanned by random generators. Entries are biased towards
        zero and towards multiples of θ so that codes of every type show up.
    """
    ring = tower.top
    if length is None:
        length = rng.randint(1, defaults.MAX_LENGTH)
    nrows = rng.randint(1, max_rows)
    rows = []
    for _ in range(nrows):
        t = rng.randrange(ring.s + 1)
        scale = ring.theta_powers[t] if t < ring.s else ring.zero
        rows.append([scale * random_element(ring, rng) if rng.random() > 0.25 else ring.zero
                     for _ in range(length)])
    return code_from_generators(tower, rows, length)


def random_subset(ell: int, rng: random.Random) -> List[int]:
    return sorted(a for a in range(ell) if rng.random() < 0.5)
