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

from sgtree.core.exceptions import InvalidSemigroup
from sgtree.core.exceptions import ParameterError
from sgtree.core.oracle import NaiveSemigroup
from sgtree.core.oracle import naive_children
from sgtree.core.oracle import naive_count
from sgtree.core.oracle import naive_from_generators_with_floor
from sgtree.core.oracle import naive_from_state
from sgtree.core.oracle import naive_jumps
from sgtree.core.oracle import naive_params
from sgtree.core.oracle import naive_primitives
from sgtree.core.oracle import naive_right_generators
from sgtree.core.oracle import naive_seeds
from sgtree.core.oracle import naive_semigroups
from sgtree.core.oracle import naive_state
from sgtree.core.semigroup import state_from_left_elements
from sgtree.core.tests.testcase import SgtreeTestCase
from sgtree.core.tests.testcase import load_fixture


class NaiveSemigroupTestCase(SgtreeTestCase):
    '''
    Tests the explicit-set semigroups
    '''

    def setUp(self):
        super(NaiveSemigroupTestCase, self).setUp()
        self.ns = NaiveSemigroup.from_elements([0, 3, 6], 8)

    def test_parameters(self):
        ns = self.ns
        self.assertEqual(sorted(ns.gaps), [1, 2, 4, 5, 7])
        self.assertEqual((ns.c, ns.m, ns.g, ns.k), (8, 3, 5, 3))
        self.assertEqual(ns.left, [0, 3, 6])
        self.assertEqual(naive_jumps(ns), [3, 3, 2])
        self.assertIn(9, ns)
        self.assertNotIn(7, ns)
        self.assertIn(1000, ns)

    def test_not_closed(self):
        self.assertRaises(InvalidSemigroup, NaiveSemigroup, [2])
        self.assertRaises(InvalidSemigroup, NaiveSemigroup, [0, 1])

    def test_primitives(self):
        self.assertEqual(naive_primitives(self.ns), [3, 8, 10])
        self.assertEqual(naive_right_generators(self.ns), [8, 10])
        self.assertEqual(naive_primitives(NaiveSemigroup()), [1])

    def test_seeds(self):
        self.assertEqual(naive_seeds(self.ns, 0), set([8, 10]))
        self.assertEqual(naive_seeds(self.ns, 1), set([8, 10]))
        self.assertEqual(naive_seeds(self.ns, 2), set([8, 9]))
        self.assertRaises(ParameterError, naive_seeds, self.ns, 3)

    def test_children(self):
        children = naive_children(NaiveSemigroup([1]))
        self.assertEqual(children, [NaiveSemigroup([1, 2]), NaiveSemigroup([1, 3])])
        self.assertEqual(naive_children(NaiveSemigroup()), [NaiveSemigroup([1])])

    def test_state_round_trip(self):
        state = state_from_left_elements([0, 3, 6], 8)
        self.assertEqual(naive_state(self.ns), state)
        self.assertEqual(naive_from_state(state), self.ns)


class NaiveEnumerationTestCase(SgtreeTestCase):
    '''
    Tests the breadth first enumeration against the known counts
    '''

    def test_count(self):
        known = [entry['count'] for entry in load_fixture('tree', 'genus-counts.json')]
        self.assertEqual(naive_count(9), dict(enumerate(known[:10])))

    def test_generations(self):
        genera = [ns.g for ns in naive_semigroups(4)]
        self.assertEqual(genera, sorted(genera))
        self.assertEqual(len(genera), 1 + 1 + 2 + 4 + 7)


class NaiveParamsTestCase(SgtreeTestCase):
    '''
    Tests the Eliahou parameters on explicit sets
    '''

    def test_naturals(self):
        self.assertEqual(tuple(naive_params(NaiveSemigroup())), (0, 1, 0, 0, 1, 1, 0))

    def test_eliahou_semigroup(self):
        ns = naive_from_generators_with_floor([19, 26, 27], 90)
        self.assertEqual(ns.g, 67)
        self.assertEqual(tuple(naive_params(ns)), (90, 19, 5, 5, 7, 4, 23))

    def test_beyond_capacity(self):
        '''
        <27, 38, 39>|130 does not fit in 128 bits
        '''
        ns = naive_from_generators_with_floor([27, 38, 39], 130)
        params = naive_params(ns)
        self.assertEqual(ns.g, 107)
        self.assertEqual((params.k, params.p), (23, 15))
