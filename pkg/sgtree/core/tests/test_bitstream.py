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

from sgtree.core.bitstream import Bitstream
from sgtree.core.bitstream import iter_bits
from sgtree.core.bitstream import low_mask
from sgtree.core.bitstream import popcount
from sgtree.core.bitstream import weight
from sgtree.core.exceptions import CapacityExceeded
from sgtree.core.tests.testcase import SgtreeTestCase
from sgtree.utils.constants import EXTENDED_CAPACITY


class BitHelpersTestCase(SgtreeTestCase):
    '''
    Tests the helper functions working on plain integers
    '''

    def test_low_mask(self):
        self.assertEqual(low_mask(0), 0)
        self.assertEqual(low_mask(-3), 0)
        self.assertEqual(low_mask(5), 31)

    def test_popcount(self):
        self.assertEqual(popcount(0), 0)
        self.assertEqual(popcount(237), 6)
        self.assertEqual(popcount(low_mask(200)), 200)

    def test_weight(self):
        # 237 = 10110111, index 0 first
        self.assertEqual(weight(237, 0, 2), 2)
        self.assertEqual(weight(237, 3, 7), 4)
        self.assertEqual(weight(237, 5, 4), 0)

    def test_iter_bits(self):
        self.assertEqual(list(iter_bits(0)), [])
        self.assertEqual(list(iter_bits(91)), [0, 1, 3, 4, 6])


class BitstreamTestCase(SgtreeTestCase):
    '''
    Tests the Bitstream value type
    '''

    def test_text_form(self):
        '''
        Index 0 is printed first
        '''
        bits = Bitstream.from_string('10110111')
        self.assertEqual(int(bits), 237)
        self.assertEqual(str(bits), '10110111')
        self.assertEqual(bits.to_string(10), '1011011100')
        self.assertEqual(Bitstream(91).to_string(8), '11011010')

    def test_invalid_text(self):
        self.assertRaises(ValueError, Bitstream.from_string, '1021')

    def test_bit(self):
        bits = Bitstream(91)
        self.assertEqual(bits.bit(0), 1)
        self.assertEqual(bits.bit(2), 0)
        self.assertEqual(bits.bit(127), 0)
        self.assertRaises(IndexError, bits.bit, 128)
        self.assertRaises(IndexError, bits.bit, -1)

    def test_shifts(self):
        bits = Bitstream.from_string('101')
        self.assertEqual(bits.shift_up(2).to_string(), '00101')
        self.assertEqual(bits.shift_up(2).shift_down(3).to_string(), '01')
        self.assertEqual(bits.shift_down(5).weight(), 0)

    def test_shift_out_of_capacity(self):
        '''
        A set bit leaving the bitstream is an overflow, not a silent loss
        '''
        bits = Bitstream(1 << 127)
        self.assertRaises(CapacityExceeded, bits.shift_up, 1)
        self.assertEqual(Bitstream(1 << 127, EXTENDED_CAPACITY).shift_up(1).bit(128), 1)
        self.assertRaises(CapacityExceeded, Bitstream, 1 << 128)

    def test_weight_range(self):
        bits = Bitstream(237)
        self.assertEqual(bits.weight_range(0, 7), 6)
        self.assertEqual(bits.weight_range(1, 1), 0)
        self.assertRaises(IndexError, bits.weight_range, 3, 2)
        self.assertRaises(IndexError, bits.weight_range, 0, 128)

    def test_operators(self):
        a = Bitstream.from_string('1100')
        b = Bitstream.from_string('1010')
        self.assertEqual(a & b, Bitstream.from_string('1'))
        self.assertEqual(a | b, Bitstream.from_string('111'))
        self.assertNotEqual(a, b)
        self.assertEqual(len(a | b), 3)
        self.assertEqual(hash(a), hash(Bitstream(3)))
