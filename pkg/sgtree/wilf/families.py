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
Parameterised semigroup families with known Eliahou constants
'''

import itertools

from sgtree.core.exceptions import ParameterError
from sgtree.core.semigroup import from_generators
from sgtree.core.semigroup import from_generators_with_floor
from sgtree.core.semigroup import state_from_left_elements
from sgtree.utils.constants import DEFAULT_CAPACITY


# The known Eliahou semigroups: (generators, floor, genus)
ELIAHOU_SEMIGROUPS = (
    ((14, 22, 23), 56, 43),
    ((16, 25, 26), 64, 51),
    ((17, 26, 28), 68, 55),
    ((17, 27, 28), 68, 55),
    ((18, 28, 29), 72, 59),
    ((19, 29, 31), 76, 63),
    ((19, 30, 31), 76, 63),
    ((20, 31, 32), 80, 67),
    ((20, 32, 33), 80, 67),
    ((19, 26, 27), 90, 67),
)


def ef_generators(m, a, b):
    '''
    Checks the constraints of EF(m, a, b) and returns its generators

    (3m + 1)/2 <= a < b <= (5m - 1)/3 and a, b, 2a, a+b, 2b, 3a, 2a+b,
    a+2b, 3b pairwise different modulo m.
    '''
    if not (2 * a >= 3 * m + 1 and a < b and 3 * b <= 5 * m - 1):
        raise ParameterError('EF needs (3m+1)/2 <= a < b <= (5m-1)/3, '
                             'got m={0} a={1} b={2}'.format(m, a, b))
    combinations = [a, b, 2 * a, a + b, 2 * b, 3 * a, 2 * a + b, a + 2 * b, 3 * b]
    if len(set(x % m for x in combinations)) != len(combinations):
        raise ParameterError('EF({0},{1},{2}) has repeated combinations modulo m'.format(m, a, b))
    return (m, a, b)


def ef_semigroup(m, a, b, capacity=DEFAULT_CAPACITY):
    '''
    EF(m, a, b) = <m, a, b>|4m
    '''
    return from_generators_with_floor(ef_generators(m, a, b), 4 * m, capacity)


def iter_ef_parameters(max_multiplicity):
    '''
    Every valid (m, a, b) with m up to max_multiplicity
    '''
    for m in range(1, max_multiplicity + 1):
        first = (3 * m + 2) // 2
        last = (5 * m - 1) // 3
        for a, b in itertools.combinations(range(first, last + 1), 2):
            try:
                yield ef_generators(m, a, b)
            except ParameterError:
                continue


def delgado_parameters(p, tau, i, j):
    '''
    (m, g, c) of Delgado's semigroup, in integer arithmetic

    The three formulas are multiplied by 4, 2 and 4 to clear denominators.
    '''
    if p <= 0 or p % 2:
        raise ParameterError('p must be even and positive, got {0}'.format(p))
    if min(tau, i, j) < 0:
        raise ParameterError('tau, i and j must be non-negative')

    m4 = p * p + p * (2 * tau + 8) + 8 + 2 * j * p
    if m4 % 4:
        raise ParameterError('non integral multiplicity for p={0} tau={1} j={2}'.format(p, tau, j))
    m = m4 // 4

    g2 = p * p + p * (2 * tau + 7) - 2 * tau + 2 * j * (p - 1) + 2 * i * m
    c4 = (p ** 3 + p * p * (2 * tau + 8) + 8 * p - 4 * tau + 2 * j * p * p
          + 2 * i * (p + 2) * m)
    if g2 % 2 or c4 % 4:
        raise ParameterError('non integral parameters for p={0} tau={1} i={2} j={3}'.format(
            p, tau, i, j))
    return m, g2 // 2, c4 // 4


def delgado(p, tau, i, j, capacity=DEFAULT_CAPACITY):
    '''
    D^(i,j)(p, tau) = <m, g, g + 1>|c
    '''
    m, g, c = delgado_parameters(p, tau, i, j)
    return from_generators_with_floor((m, g, g + 1), c, capacity)


def bef_generators(t):
    if t < 8:
        raise ParameterError('BEF_t needs t >= 8, got {0}'.format(t))
    return (2 * t + 1, 3 * t - 1, 3 * t), 10 * t


def bef(t, capacity=DEFAULT_CAPACITY):
    '''
    BEF_t = <2t+1, 3t-1, 3t>|10t
    '''
    generators, floor = bef_generators(t)
    return from_generators_with_floor(generators, floor, capacity)


def hyperelliptic(genus, capacity=DEFAULT_CAPACITY):
    '''
    <2, 2g + 1>
    '''
    if genus < 1:
        raise ParameterError('the genus must be positive, got {0}'.format(genus))
    return from_generators((2, 2 * genus + 1), capacity)


def near_ordinary(g, capacity=DEFAULT_CAPACITY):
    '''
    {0, g, g+1, ..., 2g-3} and everything from 2g on, of genus g + 1
    '''
    if g < 3:
        raise ParameterError('g must be at least 3, got {0}'.format(g))
    return state_from_left_elements([0] + list(range(g, 2 * g - 2)), 2 * g, capacity)


def multiplicity_three(t, shift, capacity=DEFAULT_CAPACITY):
    '''
    <3, 3t + shift> for shift 2 or 4
    '''
    if shift not in (2, 4):
        raise ParameterError('shift must be 2 or 4, got {0}'.format(shift))
    if t < 1:
        raise ParameterError('t must be positive, got {0}'.format(t))
    return from_generators((3, 3 * t + shift), capacity)


def expected_family_constant(family, parameter):
    '''
    Eliahou constant the closed forms give for the children of symmetric
    and pseudo-symmetric semigroups
    '''
    if family == 'near-ordinary':
        return parameter * parameter - 5 * parameter + 2
    if family in ('hyperelliptic', 'three-two', 'three-four'):
        return 0
    raise ParameterError('unknown family {0}'.format(family))
