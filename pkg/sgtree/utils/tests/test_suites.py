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

from sgtree.core.exceptions import ParameterError
from sgtree.core.tests.testcase import SgtreeTestCase
from sgtree.utils.suites import SuiteResult
from sgtree.utils.suites import family_params
from sgtree.utils.suites import load_genus_counts
from sgtree.utils.suites import run_suite
from sgtree.utils.suites import verify_counts
from sgtree.utils.suites import verify_eliahou
from sgtree.utils.suites import verify_families
from sgtree.utils.suites import verify_ggc
from sgtree.utils.suites import verify_seeds


class SuiteResultTestCase(SgtreeTestCase):
    '''
    Tests the bookkeeping of a suite
    '''

    def test_checks(self):
        result = SuiteResult('counts', 4)
        self.assertTrue(result.check(True, 'fine'))
        self.assertTrue(result.passed)
        self.assertFalse(result.check(False, 'genus 4: explored 6, known 7'))
        self.assertFalse(result.passed)
        self.assertEqual(result.checks, 2)
        self.assertEqual(result.summary(), 'suite counts: FAIL (2 checks, 1 failures)')
        self.assertEqual(result.to_dict()['failures'], ['genus 4: explored 6, known 7'])


class SuitesTestCase(SgtreeTestCase):
    '''
    Runs every suite on a small genus range
    '''

    def test_genus_counts(self):
        counts = load_genus_counts()
        self.assertEqual(len(counts), 31)
        self.assertEqual(counts[:8], [1, 1, 2, 4, 7, 12, 23, 39])

    def test_counts(self):
        result = verify_counts(8)
        self.assertTrue(result.passed, result.failures)
        self.assertEqual(result.checks, 18)

    def test_seeds(self):
        result = verify_seeds(6)
        self.assertTrue(result.passed, result.failures)

    def test_ggc(self):
        result = verify_ggc(10)
        self.assertTrue(result.passed, result.failures)

    def test_eliahou(self):
        result = verify_eliahou(9)
        self.assertTrue(result.passed, result.failures)

    def test_families(self):
        result = verify_families()
        self.assertTrue(result.passed, result.failures)

    def test_family_params(self):
        '''
        Conductors beyond the capacity go through the explicit sets
        '''
        self.assertEqual(family_params((17, 23, 24), 80).k, 23)
        self.assertEqual(family_params((27, 38, 39), 130).p, 15)

    def test_run_suite(self):
        self.assertTrue(run_suite('counts', 5).passed)
        self.assertRaises(ParameterError, run_suite, 'speed', 5)
