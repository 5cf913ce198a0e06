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
Fixed capacity bitstreams

Bit i of a bitstream is stored as bit i of a python integer, so index 0 is
the least significant bit. The text form prints index 0 first, e.g. the gap
bitstream of {0,3,6,8,...} reads 11011010.

The tree exploration works directly on the integers, the Bitstream class is
the checked value type used at the module boundaries.
'''

from sgtree.core.exceptions import CapacityExceeded
from sgtree.utils.constants import DEFAULT_CAPACITY


def low_mask(length):
    '''
    Integer with the lowest `length` bits set
    '''
    return (1 << length) - 1 if length > 0 else 0


def popcount(value):
    '''
    Number of set bits, clearing the lowest set bit until nothing is left
    '''
    count = 0
    while value:
        value &= value - 1
        count += 1
    return count


def weight(value, first, last):
    '''
    Weight of the bits first..last (both included) of an integer
    '''
    if last < first:
        return 0
    return popcount((value >> first) & low_mask(last - first + 1))


def iter_bits(value):
    '''
    Indices of the set bits in increasing order
    '''
    while value:
        lowest = value & -value
        yield lowest.bit_length() - 1
        value ^= lowest


class Bitstream(object):
    '''
    An immutable sequence of `capacity` bits
    '''

    __slots__ = ('value', 'capacity')

    def __init__(self, value=0, capacity=DEFAULT_CAPACITY):
        if capacity <= 0:
            raise ValueError('capacity must be positive, got {0}'.format(capacity))
        if value < 0:
            raise ValueError('a bitstream can not hold a negative value')
        if value >> capacity:
            raise CapacityExceeded(capacity)
        self.value = value
        self.capacity = capacity

    @classmethod
    def from_string(cls, text, capacity=DEFAULT_CAPACITY):
        '''
        Builds a bitstream from its text form, index 0 first

        :param text: string of 0 and 1, e.g. '10110111'
        '''
        value = 0
        for index, char in enumerate(text):
            if char == '1':
                value |= 1 << index
            elif char != '0':
                raise ValueError("invalid bit '{0}' in '{1}'".format(char, text))
        return cls(value, capacity)

    def to_string(self, length=None):
        '''
        Text form, index 0 first

        :param length: number of bits to print, defaults to the position of
                       the highest set bit
        '''
        if length is None:
            length = self.value.bit_length()
        return ''.join('1' if self.value >> i & 1 else '0' for i in range(length))

    def bit(self, index):
        if not 0 <= index < self.capacity:
            raise IndexError('bit index {0} out of range'.format(index))
        return self.value >> index & 1

    def shift_up(self, count):
        '''
        Moves bit i to i + count

        Raises CapacityExceeded if a set bit leaves the bitstream.
        '''
        if count < 0:
            raise ValueError('negative shift')
        return Bitstream(self.value << count, self.capacity)

    def shift_down(self, count):
        '''
        Moves bit i + count to i, dropping the lowest bits
        '''
        if count < 0:
            raise ValueError('negative shift')
        return Bitstream(self.value >> count, self.capacity)

    def weight_range(self, first, last):
        '''
        Number of ones among the indices first..last
        '''
        if not 0 <= first <= last < self.capacity:
            raise IndexError('invalid range {0}..{1}'.format(first, last))
        return weight(self.value, first, last)

    def weight(self):
        return popcount(self.value)

    def _check(self, other):
        if not isinstance(other, Bitstream):
            return NotImplemented
        return max(self.capacity, other.capacity)

    def __and__(self, other):
        capacity = self._check(other)
        if capacity is NotImplemented:
            return capacity
        return Bitstream(self.value & other.value, capacity)

    def __or__(self, other):
        capacity = self._check(other)
        if capacity is NotImplemented:
            return capacity
        return Bitstream(self.value | other.value, capacity)

    def __eq__(self, other):
        if not isinstance(other, Bitstream):
            return NotImplemented
        return self.value == other.value

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __len__(self):
        return self.value.bit_length()

    def __repr__(self):
        return 'Bitstream({0!r}, capacity={1})'.format(self.to_string(), self.capacity)

    def __str__(self):
        return self.to_string()
