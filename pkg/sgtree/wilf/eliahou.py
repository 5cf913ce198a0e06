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
Eliahou constant and Wilf inequality

E = k(p - r) - q(m - r) + rho, where p counts the primitive elements, r the
right generators, q = ceil(c / m) and rho = qm - c. The Wilf conjecture
states c <= kp, and it holds whenever E >= 0.
'''

import collections
import logging

from sgtree.core.bitstream import low_mask
from sgtree.core.bitstream import popcount
from sgtree.core.exceptions import ParameterError
from sgtree.core.semigroup import left_primitives

logger = logging.getLogger('sgtree.custom')


class EliahouParams(collections.namedtuple('EliahouParams',
                                           ['c', 'm', 'q', 'rho', 'p', 'r', 'k'])):
    '''
    Everything needed for the Eliahou constant and the Wilf inequality
    '''
    __slots__ = ()

    def check(self):
        '''
        :raise ParameterError: if q and rho do not match c and m
        '''
        if not 0 <= self.rho < self.m or self.q * self.m != self.c + self.rho:
            raise ParameterError('inconsistent q={0} rho={1} for c={2} m={3}'.format(
                self.q, self.rho, self.c, self.m))
        if self.r > self.p or self.r > self.m:
            raise ParameterError('r={0} exceeds p={1} or m={2}'.format(self.r, self.p, self.m))
        return self


# A node whose Eliahou constant is negative, or that breaks the Wilf
# inequality. `description` is the <generators>|conductor notation.
EliahouHit = collections.namedtuple('EliahouHit', ['description', 'genus', 'params', 'value'])


def eliahou_constant(params):
    return params.k * (params.p - params.r) - params.q * (params.m - params.r) + params.rho


def wilf_holds(params):
    return params.c <= params.k * params.p


def make_params(c, m, p, r, k):
    '''
    Fills in q and rho
    '''
    q = -(-c // m)
    return EliahouParams(c, m, q, q * m - c, p, r, k)


def params_from_state(state):
    '''
    Parameters computed from scratch
    '''
    if state.k == 0:
        return EliahouParams(0, 1, 0, 0, 1, 1, 0)
    r = popcount(state.seeds & low_mask(state.m))
    return make_params(state.c, state.m, len(left_primitives(state)) + r, r, state.k)


def child_params(parent, offset, is_weak, r_previous):
    '''
    Parameters of the child taking away c + offset

    Only valid for non-ordinary parents.

    :param parent: parameters of the parent
    :param offset: s, the removed element is c + s
    :param is_weak: whether c + s is a weak generator of the parent
    :param r_previous: right generators of the preceding sibling inherited
                       from the parent; r of the parent for the first child
    '''
    if parent.k < 2:
        raise ParameterError('the update needs a non-ordinary parent')
    if not 0 <= offset < parent.m:
        raise ParameterError('offset {0} out of range'.format(offset))
    delta_w = 1 if is_weak else 0
    delta_rho = 1 if parent.rho <= offset else 0
    return EliahouParams(parent.c + offset + 1,
                         parent.m,
                         parent.q + delta_rho,
                         parent.rho - offset - 1 + delta_rho * parent.m,
                         parent.p - delta_w,
                         r_previous - delta_w,
                         parent.k + offset)
