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
Parent to child update of the gap and seed bitstreams
'''

from sgtree.core.exceptions import CapacityExceeded
from sgtree.core.exceptions import NotARightGenerator
from sgtree.core.semigroup import SeedTable
from sgtree.core.semigroup import SemigroupState
from sgtree.core.semigroup import compute_jumps
from sgtree.core.semigroup import left_elements


def child_bits(gaps, seeds, c, element):
    '''
    Gap and seed bitstreams of the semigroup without the right generator
    `element`, as integers

    :param gaps: G of the parent
    :param seeds: S of the parent
    :param c: conductor of the parent
    :param element: right generator being removed, at least c
    '''
    offset = element - c
    shifted = gaps
    kept = seeds
    for _ in range(offset):
        shifted <<= 1
        kept &= shifted
    return gaps | (1 << (element - 1)), (kept >> (offset + 1)) | (7 << (element - 2))


def child_jumps(k, m, u, v, offset):
    '''
    Multiplicity and first two jumps of the child taking away c + offset

    Only the last jump of the parent grows when the conductor is removed,
    otherwise the new left elements c, ..., c + offset - 1 add jumps
    1, ..., 1, 2.
    '''
    if k == 0:
        return 2, None, None
    known = [m, u, v][:k]
    if offset == 0:
        if k <= 3:
            known[k - 1] += 1
    elif k < 3:
        known.extend([1] * min(offset - 1, 3) + [2])
    known.extend([None, None])
    return known[0], known[1], known[2]


def remove_right_generator(state, element):
    '''
    The child of a state in the semigroup tree

    :param state: the parent
    :param element: one of its right generators
    :raise NotARightGenerator: if element can not be removed
    :raise CapacityExceeded: if the child's conductor does not fit
    '''
    if state.k == 0:
        if element != 1:
            raise NotARightGenerator('the only right generator of N is 1')
        return SemigroupState(1, 3, 2, 2, 1, 1, capacity=state.capacity)

    offset = element - state.c
    if not 0 <= offset < state.m or not state.seeds >> offset & 1:
        raise NotARightGenerator('{0} is not a right generator of {1}'.format(element, state))
    if element + 1 > state.capacity:
        raise CapacityExceeded(state.capacity, state.g + 1)

    gaps, seeds = child_bits(state.gaps, state.seeds, state.c, element)
    m, u, v = child_jumps(state.k, state.m, state.u, state.v, offset)
    return SemigroupState(gaps, seeds, element + 1, m, state.k + offset, state.g + 1,
                          u=u, v=v, capacity=state.capacity)


def classify_child_seeds(state, element):
    '''
    Table of seeds of the child assembled from the parent's seeds only

    The seeds of the child are of three kinds:

    * recycled: order-p seeds of the parent larger than the removed element
    * old-order new seeds: element + u_p, when the element is an order-(p+1)
      seed, plus the cases of the last row when the element is c or c + 1
    * new-order seeds: element + 1 (order s-2), element + 1 and element + 2
      (order s-1), s being the position of the element in the semigroup
    '''
    if state.k == 0:
        if element != 1:
            raise NotARightGenerator('the only right generator of N is 1')
        return SeedTable([[1, 1]])

    c, k = state.c, state.k
    offset = element - c
    if not 0 <= offset < state.m or not state.seeds >> offset & 1:
        raise NotARightGenerator('{0} is not a right generator of {1}'.format(element, state))

    left = left_elements(state)
    parent_jumps = compute_jumps(left, c)
    child_c = element + 1

    def is_seed(order, candidate):
        position = candidate - c
        if not 0 <= position < parent_jumps[order]:
            return False
        return bool(state.seeds >> (left[order] + position) & 1)

    lengths = list(parent_jumps)
    if offset == 0:
        lengths[k - 1] += 1
    else:
        lengths.extend([1] * (offset - 1) + [2])
    rows = [[0] * length for length in lengths]

    for order in range(k):
        row = rows[order]
        jump = parent_jumps[order]

        # recycled
        for candidate in range(child_c, c + jump):
            if is_seed(order, candidate) and candidate - child_c < len(row):
                row[candidate - child_c] = 1

        # old-order new seeds
        if order < k - 1:
            if is_seed(order + 1, element):
                row[jump - 1] = 1
        elif offset == 0:
            row[jump - 1] = 1
            row[jump] = 1
        elif offset == 1:
            row[jump - 1] = 1

    # new-order seeds
    if offset >= 1:
        rows[k + offset - 1] = [1, 1]
    if offset >= 2:
        rows[k + offset - 2] = [1]

    return SeedTable(rows)
