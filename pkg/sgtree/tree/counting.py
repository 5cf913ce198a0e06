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
Children, grandchildren and great-grandchildren counted from the seeds

Every count below is a weight of a window of S combined with shifted copies
of itself, (S >> t) being the bits of S from index t on.
'''

import collections

from sgtree.core.bitstream import low_mask
from sgtree.core.bitstream import popcount


DescendantCounts = collections.namedtuple('DescendantCounts', ['n_c', 'n_gc', 'n_ggc'])


def _choose(n, r):
    if n < r:
        return 0
    result = 1
    for i in range(r):
        result = result * (n - i) // (i + 1)
    return result


def strong_weight(seeds, m, u):
    '''
    w_0^{u-1}(S and (S >> m)), the number of strong generators
    '''
    return popcount(seeds & (seeds >> m) & low_mask(u))


def triple_weight(seeds, m, u, v):
    '''
    w_0^{v-1}(S and (S >> u) and (S >> (u+m)))
    '''
    return popcount(seeds & (seeds >> u) & (seeds >> (u + m)) & low_mask(v))


def counts_from_bits(seeds, k, m, u, v):
    '''
    (n_c, n_gc, n_ggc) of a node given as raw bitstream values

    This is the form used in the exploration loop.
    '''
    if k == 0:
        return 1, 2, 4
    if k == 1:
        if m in (2, 3):
            return m, _choose(m, 2) + 3, _choose(m, 3) + 3 * m + 1
        return m, _choose(m, 2) + 3, _choose(m, 3) + 3 * m + 3

    if k == 2:
        n_c = m - 1
        n_gc = _choose(n_c, 2) + strong_weight(seeds, m, u)
        delta_a = 1 if m < 2 * u else 0
        delta_b = 1 if u == m or 2 * u != m else 0
        delta_c = 1 if u < m - 1 and 2 * u + 1 != m else 0
        delta_d = 1 if u == m - 1 else 0
        n_ggc = (_choose(m - 1, 3) + (u - delta_a) * (m - 2)
                 + delta_b + 2 * delta_c + delta_d)
        return n_c, n_gc, n_ggc

    n_c = popcount(seeds & low_mask(m))
    strong = strong_weight(seeds, m, u)
    n_gc = _choose(n_c, 2) + strong
    n_ggc = _choose(n_c, 3) + strong * (n_c - 1) + triple_weight(seeds, m, u, v)
    return n_c, n_gc, n_ggc


def descendant_counts(state):
    '''
    Number of children, grandchildren and great-grandchildren of a state
    '''
    return DescendantCounts(*counts_from_bits(state.seeds, state.k, state.m, state.u, state.v))


def count_right_generators(state):
    '''
    w_0^{m-1}(S); m for ordinary and m - 1 for pseudo-ordinary semigroups
    '''
    if state.k == 0:
        return 1
    return popcount(state.seeds & low_mask(state.m))


def count_strong_generators(state):
    '''
    Strong generators, or the two ordinarily strong ones m and m + 1 of an
    ordinary semigroup
    '''
    if state.k == 0:
        return 0
    if state.k == 1:
        return min(state.m, 2)
    return strong_weight(state.seeds, state.m, state.u)


def count_new_strong_generators(state):
    '''
    Sum over the children of the strong generators that are not generators
    of the parent
    '''
    k, m, u = state.k, state.m, state.u
    if k == 0:
        return 0
    if k == 1:
        return 1 if m == 2 else 0
    if k == 2:
        return 1 if u in (m - 1, m) else 0
    if u != m:
        return 0
    return triple_weight(state.seeds, m, u, state.v)


def count_newly_strong_generators(state):
    '''
    Sum over the children of the generators inherited from the parent that
    were weak there and are strong in the child
    '''
    k, m, u = state.k, state.m, state.u
    if k == 0:
        return 0
    if k == 1:
        if m <= 2:
            return 0
        return 1 if m == 3 else 3
    if k == 2:
        total = 0
        if u < m and m != 2 * u:
            total += 1
        if u < m - 1 and m != 2 * u + 1:
            total += 2
        return total
    if u >= m:
        return 0
    return triple_weight(state.seeds, m, u, state.v)
