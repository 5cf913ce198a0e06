# -*- coding: utf-8 -*-

# This file is part of sgtree.
#
# sgtree is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# sgtree is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License

'''
Numerical semigroups encoded by their gap and seed bitstreams

A semigroup with conductor c and left elements 0 = l_0 < l_1 < ... < l_{k-1}
is stored as

* G, the gap bitstream: bit i is 1 iff i + 1 is a gap (c bits)
* S, the seed bitstream: the rows of the table of seeds, concatenated (c bits)

together with the conductor c, the multiplicity m, the rank k, the genus g
and the jumps u = l_2 - l_1 and v = l_3 - l_2 (the last left element jumps
to the conductor). The semigroup of all the non-negative integers has c = 0,
m = 1, k = 0 and empty bitstreams.
'''

import logging
import math
from functools import reduce

from sgtree.core.bitstream import Bitstream
from sgtree.core.bitstream import iter_bits
from sgtree.core.bitstream import low_mask
from sgtree.core.bitstream import popcount
from sgtree.core.exceptions import CapacityExceeded
from sgtree.core.exceptions import InvalidSemigroup
from sgtree.core.exceptions import ParameterError
from sgtree.utils.constants import DEFAULT_CAPACITY

logger = logging.getLogger('sgtree.custom')


KIND_NATURALS = 'N'
KIND_ORDINARY = 'ordinary'
KIND_PSEUDO_ORDINARY = 'pseudo-ordinary'
KIND_SYMMETRIC = 'symmetric'
KIND_PSEUDO_SYMMETRIC = 'pseudo-symmetric'
KIND_GENERIC = 'generic'


class SeedTable(object):
    '''
    The table of seeds of a semigroup

    Row p has length u_p and its entry j is 1 iff c + j is an order-p seed.
    '''

    __slots__ = ('rows',)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def from_bits(cls, seeds, left, jumps):
        '''
        Slices a seed bitstream by the jumps of the semigroup
        '''
        return cls([[seeds >> (start + j) & 1 for j in range(length)]
                    for start, length in zip(left, jumps)])

    @property
    def row_lengths(self):
        return tuple(len(row) for row in self.rows)

    def concatenated(self, capacity=DEFAULT_CAPACITY):
        value = 0
        index = 0
        for row in self.rows:
            for entry in row:
                value |= entry << index
                index += 1
        return Bitstream(value, capacity)

    def to_string(self):
        return '/'.join(''.join(str(entry) for entry in row) for row in self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, SeedTable):
            return NotImplemented
        return self.rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return 'SeedTable({0!r})'.format(self.to_string())

    def __str__(self):
        return '[{0}]'.format(self.to_string())


class SemigroupState(object):
    '''
    A node of the semigroup tree

    The bitstreams are kept as plain integers in `gaps` and `seeds`, the
    properties G and S wrap them in Bitstream objects.
    '''

    __slots__ = ('gaps', 'seeds', 'c', 'm', 'k', 'g', 'u', 'v', 'capacity')

    def __init__(self, gaps, seeds, c, m, k, g, u=None, v=None,
                 capacity=DEFAULT_CAPACITY):
        if c > capacity:
            raise CapacityExceeded(capacity, g)
        self.gaps = gaps
        self.seeds = seeds
        self.c = c
        self.m = m
        self.k = k
        self.g = g
        if (k >= 2 and u is None) or (k >= 3 and v is None):
            jumps = compute_jumps(left_from_gaps(gaps, c), c)
            u = jumps[1]
            v = jumps[2] if k >= 3 else None
        self.u = u if k >= 2 else None
        self.v = v if k >= 3 else None
        self.capacity = capacity

    @property
    def G(self):
        return Bitstream(self.gaps, self.capacity)

    @property
    def S(self):
        return Bitstream(self.seeds, self.capacity)

    @property
    def frobenius(self):
        return self.c - 1

    @property
    def is_naturals(self):
        return self.k == 0

    def validate(self):
        '''
        Checks the invariants that tie the bitstreams to the parameters

        :raise InvalidSemigroup: on the first inconsistency found
        '''
        c = self.c
        if self.gaps >> max(c - 1, 0):
            raise InvalidSemigroup('gap bitstream longer than c - 1')
        if self.seeds >> c:
            raise InvalidSemigroup('seed bitstream longer than c')
        if popcount(self.gaps) != self.g:
            raise InvalidSemigroup('genus {0} does not match G'.format(self.g))
        if c != self.g + self.k:
            raise InvalidSemigroup('c = {0} is not g + k = {1}'.format(c, self.g + self.k))
        if self.k == 0:
            if c or self.m != 1:
                raise InvalidSemigroup('rank 0 is only allowed for the naturals')
            return
        left = left_from_gaps(self.gaps, c)
        if len(left) != self.k:
            raise InvalidSemigroup('rank {0} does not match G'.format(self.k))
        jumps = compute_jumps(left, c)
        if jumps[0] != self.m or max(jumps) > self.m:
            raise InvalidSemigroup('multiplicity {0} does not match G'.format(self.m))
        if self.k >= 2 and jumps[1] != self.u or self.k >= 3 and jumps[2] != self.v:
            raise InvalidSemigroup('cached jumps do not match G')
        tail = low_mask(c) ^ low_mask(left[-1])
        if self.seeds & tail != tail:
            raise InvalidSemigroup('the last row of the table of seeds is not full')

    def __eq__(self, other):
        if not isinstance(other, SemigroupState):
            return NotImplemented
        return (self.gaps, self.seeds, self.c) == (other.gaps, other.seeds, other.c)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.gaps, self.seeds, self.c))

    def __repr__(self):
        return 'SemigroupState({0}, G={1}, S={2})'.format(
            describe(self),
            self.G.to_string(self.c),
            self.S.to_string(self.c))

    def __str__(self):
        return describe(self)


def naturals(capacity=DEFAULT_CAPACITY):
    '''
    The root of the tree
    '''
    return SemigroupState(0, 0, 0, 1, 0, 0, capacity=capacity)


def left_from_gaps(gaps, c):
    if c == 0:
        return []
    return [0] + [i + 1 for i in range(c - 1) if not gaps >> i & 1]


def compute_jumps(left, c):
    return tuple(b - a for a, b in zip(left, left[1:] + [c]))


def left_elements(state):
    '''
    Elements smaller than the conductor
    '''
    return left_from_gaps(state.gaps, state.c)


def jumps(state):
    '''
    The jumps u_0, ..., u_{k-1} (u_0 is the multiplicity)
    '''
    return compute_jumps(left_elements(state), state.c)


def sigma_from_left_elements(left, c, capacity=DEFAULT_CAPACITY):
    '''
    The bitstream of length 2c marking the integers outside of L + L

    :param left: the left elements
    :param c: the conductor
    :param capacity: width of the result, at least 2c
    '''
    if 2 * c > capacity:
        raise CapacityExceeded(capacity)
    elements = 0
    for element in left:
        elements |= 1 << element
    sums = 0
    for element in left:
        sums |= elements << element
    return Bitstream(low_mask(2 * c) & ~sums, capacity)


def _check_left_elements(left, c):
    members = set(left)
    if not left or left[0] != 0:
        raise InvalidSemigroup('0 must be a left element')
    if left[-1] >= c:
        raise InvalidSemigroup('left element {0} is not below c = {1}'.format(left[-1], c))
    if c - 1 in members:
        raise InvalidSemigroup('{0} can not be the conductor, {1} is an element'.format(c, c - 1))
    for position, a in enumerate(left):
        for b in left[position:]:
            if a + b < c and a + b not in members:
                raise InvalidSemigroup('{0} + {1} is missing below the conductor'.format(a, b))


def state_from_left_elements(left, c, capacity=DEFAULT_CAPACITY):
    '''
    Builds a state splitting the sigma bitstream

    G holds the sigma bits 1..c-1 and S the bits c..2c-1.

    :param left: collection of the elements below c
    :param c: the conductor
    '''
    left = sorted(set(left))
    if c == 0:
        if left not in ([], [0]):
            raise InvalidSemigroup('the conductor 0 only has the left element 0')
        return naturals(capacity)
    if c > capacity:
        raise CapacityExceeded(capacity, c - len(left))
    _check_left_elements(left, c)

    sigma = sigma_from_left_elements(left, c, 2 * capacity).value
    gaps = (sigma >> 1) & low_mask(c - 1)
    seeds = sigma >> c
    k = len(left)
    m = left[1] if k > 1 else c
    return SemigroupState(gaps, seeds, c, m, k, c - k, capacity=capacity)


def low_rank_state(m, u=None, v=None, capacity=DEFAULT_CAPACITY):
    '''
    Closed forms of the bitstreams of semigroups of rank at most 3

    * low_rank_state(m) is the ordinary semigroup {0, m, m+1, ...}
    * low_rank_state(m, u) is {0, m, m+u, m+u+1, ...}
    * low_rank_state(m, u, v) is {0, m, m+u, m+u+v, m+u+v+1, ...}

    m = 1 gives back the naturals.
    '''
    if u is None:
        if v is not None:
            raise ParameterError('v needs u')
        if m < 1:
            raise ParameterError('multiplicity must be positive, got {0}'.format(m))
        if m == 1:
            return naturals(capacity)
        return SemigroupState(low_mask(m - 1), low_mask(m), m, m, 1, m - 1, capacity=capacity)

    if v is None:
        if not 1 < u <= m:
            raise ParameterError('rank 2 needs 1 < u <= m, got m={0} u={1}'.format(m, u))
        c = m + u
        gaps = low_mask(c - 1) - (1 << (m - 1))
        seeds = low_mask(c) - (1 << (m - u))
        return SemigroupState(gaps, seeds, c, m, 2, c - 2, u=u, capacity=capacity)

    if not 1 <= u <= m:
        raise ParameterError('rank 3 needs 1 <= u <= m, got m={0} u={1}'.format(m, u))
    top = m - u if u < m else m
    if not 2 <= v <= top:
        raise ParameterError('rank 3 needs 2 <= v <= {0}, got m={1} u={2} v={3}'.format(top, m, u, v))
    c = m + u + v
    gaps = low_mask(c - 1) - (1 << (m - 1)) - (1 << (m + u - 1))
    seeds = low_mask(c) - (1 << (m - v)) - (1 << (m + u - v))
    if u < m:
        seeds -= 1 << (m - u - v)
    return SemigroupState(gaps, seeds, c, m, 3, c - 3, u=u, v=v, capacity=capacity)


def _closure_below(generators, bound):
    '''
    Bitmask of the elements of <generators> smaller than bound
    '''
    mask = low_mask(bound)
    reached = 1 & mask
    while True:
        grown = reached
        for generator in generators:
            grown |= reached << generator
        grown &= mask
        if grown == reached:
            return reached
        reached = grown


def _check_generators(generators):
    generators = sorted(set(generators))
    if not generators:
        raise InvalidSemigroup('at least one generator is needed')
    if generators[0] <= 0:
        raise InvalidSemigroup('generators must be positive')
    return generators


def from_generators_with_floor(generators, floor, capacity=DEFAULT_CAPACITY):
    '''
    The smallest semigroup holding the generators and every integer >= floor

    The conductor can be smaller than the floor if the closure of the
    generators already fills the integers right below it.
    '''
    generators = _check_generators(generators)
    if floor < 1:
        raise ParameterError('the floor must be positive, got {0}'.format(floor))

    reached = _closure_below(generators, floor)
    c = (low_mask(floor) & ~reached).bit_length()
    left = list(iter_bits(reached & low_mask(c)))
    if c > capacity:
        raise CapacityExceeded(capacity, c - len(left))
    return state_from_left_elements(left, c, capacity)


def from_generators(generators, capacity=DEFAULT_CAPACITY):
    '''
    The semigroup generated by a set of coprime integers
    '''
    generators = _check_generators(generators)
    if reduce(math.gcd, generators) != 1:
        raise InvalidSemigroup('generators {0} are not coprime'.format(generators))

    # Schur: the conductor is at most (a_1 - 1)(a_n - 1)
    floor = max(1, (generators[0] - 1) * (generators[-1] - 1))
    return from_generators_with_floor(generators, floor, capacity)


def right_generators(state):
    '''
    The generators not smaller than the conductor, i.e. the order-0 seeds
    '''
    if state.k == 0:
        return [1]
    return [state.c + i for i in iter_bits(state.seeds & low_mask(state.m))]


def is_order_p_seed(state, element, order):
    '''
    Reads the order-p seed bit of an element from S
    '''
    if not 0 <= order < state.k:
        raise ParameterError('order {0} is not below the rank {1}'.format(order, state.k))
    left = left_elements(state)
    window = compute_jumps(left, state.c)[order]
    if not state.c <= element < state.c + window:
        raise ParameterError('{0} is outside the order-{1} window'.format(element, order))
    return bool(state.seeds >> (left[order] + element - state.c) & 1)


def is_strong_generator(state, element):
    '''
    A right generator is strong iff it is an order-1 seed
    '''
    if state.k < 2:
        return False
    offset = element - state.c
    if not 0 <= offset < state.m or not state.seeds >> offset & 1:
        raise ParameterError('{0} is not a right generator'.format(element))
    return offset < state.u and bool(state.seeds >> (state.m + offset) & 1)


def seed_table(state):
    left = left_elements(state)
    return SeedTable.from_bits(state.seeds, left, compute_jumps(left, state.c))


def left_primitives(state):
    '''
    Minimal generators below the conductor
    '''
    nonzero = left_elements(state)[1:]
    elements = 0
    for element in nonzero:
        elements |= 1 << element
    sums = 0
    for element in nonzero:
        sums |= elements << element
    return [element for element in nonzero if not sums >> element & 1]


def primitives(state):
    '''
    The minimal generating set
    '''
    return left_primitives(state) + right_generators(state)


def elements_below(state, bound):
    gaps = set(gap + 1 for gap in iter_bits(state.gaps))
    return [x for x in range(bound) if x not in gaps]


def is_symmetric(state):
    return state.k == state.g


def is_pseudo_symmetric(state):
    return state.k == state.g - 1


def kind(state):
    '''
    Short label of the family the semigroup belongs to
    '''
    if state.k == 0:
        return KIND_NATURALS
    if state.k == 1:
        return KIND_ORDINARY
    if state.k == 2:
        return KIND_PSEUDO_ORDINARY
    if is_symmetric(state):
        return KIND_SYMMETRIC
    if is_pseudo_symmetric(state):
        return KIND_PSEUDO_SYMMETRIC
    return KIND_GENERIC


def describe(state):
    '''
    Set notation, e.g. {0,3,6,8,...}
    '''
    shown = left_elements(state) + [state.c]
    return '{' + ','.join(str(x) for x in shown) + ',...}'


def generator_notation(state):
    '''
    The left primitives and the conductor, e.g. <14,22,23>|56
    '''
    return '<{0}>|{1}'.format(','.join(str(x) for x in left_primitives(state)), state.c)
