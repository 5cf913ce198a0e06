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

from sgtree.core.oracle import naive_children
from sgtree.core.oracle import naive_from_state
from sgtree.core.semigroup import is_strong_generator
from sgtree.core.semigroup import low_rank_state
from sgtree.core.semigroup import naturals
from sgtree.core.semigroup import right_generators
from sgtree.core.semigroup import state_from_left_elements
from sgtree.core.tests.testcase import SgtreeTestCase
from sgtree.tree.counting import count_new_strong_generators
from sgtree.tree.counting import count_newly_strong_generators
from sgtree.tree.counting import count_right_generators
from sgtree.tree.counting import count_strong_generators
from sgtree.tree.counting import counts_from_bits
from sgtree.tree.counting import descendant_counts
from sgtree.tree.counting import strong_weight
from sgtree.tree.counting import triple_weight
from sgtree.tree.explore import iter_semigroups


def naive_descendants(ns, depth):
    '''
    Sizes of the next `depth` generations below a naive semigroup
    '''
    sizes = []
    level = [ns]
    for _ in range(depth):
        level = [child for parent in level for child in naive_children(parent)]
        sizes.append(len(level))
    return tuple(sizes)


class DescendantCountsTestCase(SgtreeTestCase):
    '''
    Tests the number of children, grandchildren and great-grandchildren
    '''

    def test_example(self):
        state = state_from_left_elements([0, 3, 6], 8)
        self.assertEqual(descendant_counts(state), (2, 3, 3))
        self.assertEqual(descendant_counts(state).n_ggc, 3)
        self.assertEqual(strong_weight(237, 3, 3), 2)
        self.assertEqual(triple_weight(237, 3, 3, 2), 1)

    def test_low_genus(self):
        self.assertEqual(descendant_counts(naturals()), (1, 2, 4))
        self.assertEqual(descendant_counts(low_rank_state(2)), (2, 4, 7))
        self.assertEqual(counts_from_bits(0, 0, 1, None, None), (1, 2, 4))

    def test_against_enumeration(self):
        '''
        Every semigroup up to genus 8, all three generations
        '''
        for state in iter_semigroups(8):
            expected = naive_descendants(naive_from_state(state), 3)
            self.assertEqual(tuple(descendant_counts(state)), expected, str(state))

    def test_large_ordinary(self):
        for m in range(4, 9):
            state = low_rank_state(m)
            self.assertEqual(tuple(descendant_counts(state)),
                             naive_descendants(naive_from_state(state), 3))

    def test_pseudo_ordinary(self):
        for m in range(3, 10):
            for u in range(2, m + 1):
                state = low_rank_state(m, u)
                self.assertEqual(tuple(descendant_counts(state)),
                                 naive_descendants(naive_from_state(state), 3), str(state))


class GeneratorCountsTestCase(SgtreeTestCase):
    '''
    Tests the generator counts the descendant counts are made of
    '''

    def test_right_generators(self):
        self.assertEqual(count_right_generators(naturals()), 1)
        self.assertEqual(count_right_generators(low_rank_state(5)), 5)
        self.assertEqual(count_right_generators(low_rank_state(5, 3)), 4)
        for state in iter_semigroups(7):
            self.assertEqual(count_right_generators(state), len(right_generators(state)))

    def test_strong_generators(self):
        self.assertEqual(count_strong_generators(naturals()), 0)
        self.assertEqual(count_strong_generators(low_rank_state(2)), 2)
        self.assertEqual(count_strong_generators(low_rank_state(6)), 2)
        for state in iter_semigroups(7):
            if state.k < 2:
                continue
            strong = [x for x in right_generators(state) if is_strong_generator(state, x)]
            self.assertEqual(count_strong_generators(state), len(strong))

    def test_ordinary(self):
        self.assertEqual(count_newly_strong_generators(low_rank_state(4)), 3)
        self.assertEqual(count_newly_strong_generators(low_rank_state(3)), 1)
        self.assertEqual(count_newly_strong_generators(low_rank_state(2)), 0)
        self.assertEqual(count_new_strong_generators(low_rank_state(2)), 1)
        self.assertEqual(count_new_strong_generators(low_rank_state(4)), 0)

    def test_pseudo_ordinary(self):
        state = low_rank_state(4, 2)
        self.assertEqual(count_newly_strong_generators(state), 2)
        self.assertEqual(count_new_strong_generators(state), 0)

    def test_great_grandchildren_split(self):
        '''
        Above rank 2 the great-grandchildren are the triples of children,
        one per strong generator and sibling, plus the new and newly strong
        generators
        '''
        for state in iter_semigroups(9):
            if state.k < 3:
                continue
            n_c = count_right_generators(state)
            strong = count_strong_generators(state)
            extra = count_new_strong_generators(state) + count_newly_strong_generators(state)
            triples = n_c * (n_c - 1) * (n_c - 2) // 6
            self.assertEqual(descendant_counts(state).n_ggc,
                             triples + strong * (n_c - 1) + extra)
            self.assertEqual(descendant_counts(state).n_gc,
                             n_c * (n_c - 1) // 2 + strong)
