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
Slow reference implementations on explicit sets of integers

Nothing here uses bitstreams, so they are usable as an independent check of
the fast path and for conductors beyond any capacity.
'''

import collections

from sgtree.core.exceptions import InvalidSemigroup
from sgtree.core.exceptions import ParameterError
from sgtree.core.semigroup import left_elements
from sgtree.core.semigroup import state_from_left_elements
from sgtree.utils.constants import DEFAULT_CAPACITY


NaiveParams = collections.namedtuple('NaiveParams', ['c', 'm', 'q', 'rho', 'p', 'r', 'k'])


class NaiveSemigroup(object):
    '''
    A semigroup given by its gaps

    `elements` lists every element in [0, c + 2m], enough to see all the
    seeds (below c + m) and their sums.
    '''

    def __init__(self, gaps=()):
        self.gaps = frozenset(gaps)
        if any(gap <= 0 for gap in self.gaps):
            raise InvalidSemigroup('gaps must be positive integers')
        self.c = max(self.gaps) + 1 if self.gaps else 0
        self.g = len(self.gaps)
        self.m = 1
        while self.m in self.gaps:
            self.m += 1
        self.elements = tuple(x for x in range(self.c + 2 * self.m + 1) if x not in self.gaps)
        members = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                if a + b > self.elements[-1]:
                    break
                if a + b not in members:
                    raise InvalidSemigroup('{0} + {1} is a gap'.format(a, b))

    @classmethod
    def from_elements(cls, elements, c):
        '''
        :param elements: the elements below c
        '''
        members = set(elements)
        return cls(x for x in range(1, c) if x not in members)

    @property
    def left(self):
        return [x for x in self.elements if x < self.c]

    @property
    def k(self):
        return len(self.left)

    def __contains__(self, x):
        return x >= self.c or (x >= 0 and x not in self.gaps)

    def __eq__(self, other):
        if not isinstance(other, NaiveSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.gaps)

    def __repr__(self):
        return 'NaiveSemigroup({0})'.format(sorted(self.gaps))


def naive_from_state(state):
    return NaiveSemigroup.from_elements(left_elements(state), state.c)


def naive_state(ns, capacity=DEFAULT_CAPACITY):
    '''
    The bitstream state of a naive semigroup, through the sigma split
    '''
    return state_from_left_elements(ns.left, ns.c, capacity)


def naive_jumps(ns):
    left = ns.left
    return [b - a for a, b in zip(left, left[1:] + [ns.c])]


def naive_seeds(ns, order):
    '''
    Order-p seeds straight from the definition

    l_s is an order-p seed when l_s + l_p differs from every l_i + l_j with
    p < i <= j < s.
    '''
    if not 0 <= order < ns.k:
        raise ParameterError('order {0} is not below the rank {1}'.format(order, ns.k))
    elements = ns.elements
    window = naive_jumps(ns)[order]
    seeds = set()
    for s, candidate in enumerate(elements):
        if candidate < ns.c:
            continue
        if candidate >= ns.c + window:
            break
        target = candidate + elements[order]
        found = False
        for i in range(order + 1, s):
            for j in range(i, s):
                if elements[i] + elements[j] == target:
                    found = True
                    break
            if found:
                break
        if not found:
            seeds.add(candidate)
    return seeds


def naive_primitives(ns):
    '''
    Nonzero elements that are not the sum of two nonzero elements
    '''
    nonzero = [x for x in ns.elements if 0 < x < max(ns.c, 1) + ns.m]
    members = set(nonzero)
    result = []
    for x in nonzero:
        if not any(x - a in members for a in nonzero if a <= x - a):
            result.append(x)
    return result


def naive_right_generators(ns):
    return [x for x in naive_primitives(ns) if x >= ns.c]


def naive_children(ns):
    '''
    Semigroups obtained taking away one right generator
    '''
    return [NaiveSemigroup(ns.gaps | {x}) for x in naive_right_generators(ns)]


def naive_semigroups(max_genus):
    '''
    All semigroups of genus up to max_genus, generation by generation
    '''
    level = [NaiveSemigroup()]
    for _ in range(max_genus + 1):
        for ns in level:
            yield ns
        level = [child for ns in level for child in naive_children(ns)]


def naive_count(max_genus):
    '''
    Number of semigroups of each genus, as a dictionary
    '''
    counts = dict((genus, 0) for genus in range(max_genus + 1))
    for ns in naive_semigroups(max_genus):
        counts[ns.g] += 1
    return counts


def naive_params(ns):
    '''
    Parameters of the Eliahou constant of a naive semigroup
    '''
    primitives = naive_primitives(ns)
    c, m = ns.c, ns.m
    if c == 0:
        return NaiveParams(0, 1, 0, 0, 1, 1, 0)
    q = -(-c // m)
    return NaiveParams(c, m, q, q * m - c, len(primitives),
                       len([x for x in primitives if x >= c]), ns.k)


def naive_from_generators_with_floor(generators, floor):
    '''
    <generators>|floor on explicit sets, for conductors beyond any capacity
    '''
    members = set([0])
    for x in range(1, floor):
        if any(x - a in members for a in generators if a <= x):
            members.add(x)
    return NaiveSemigroup(x for x in range(1, floor) if x not in members)
