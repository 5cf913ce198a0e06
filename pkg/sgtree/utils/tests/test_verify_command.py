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

import json
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError

from sgtree.core.tests.testcase import SgtreeTestCase
from sgtree.utils.suites import SuiteResult


class VerifyCommandTestCase(SgtreeTestCase):
    '''
    Tests the verify command
    '''

    def call(self, *args, **options):
        out = StringIO()
        call_command('verify', *args, stdout=out, **options)
        return out.getvalue()

    def test_one_suite(self):
        output = self.call('counts', genus=6)
        self.assertTrue(output.startswith('suite counts: pass'))

    def test_all_suites(self):
        '''
        Every suite passes at its default genus bound
        '''
        data = json.loads(self.call(format='json'))
        self.assertEqual([(entry['suite'], entry['genus']) for entry in data],
                         [('counts', 16), ('seeds', 16), ('ggc', 18), ('eliahou', 14),
                          ('families', 0)])
        for entry in data:
            self.assertTrue(entry['passed'], entry['failures'])

    def test_human_summary(self):
        lines = self.call('all', genus=5).splitlines()
        self.assertEqual([line.split(':')[0] for line in lines],
                         ['suite counts', 'suite seeds', 'suite ggc', 'suite eliahou',
                          'suite families'])
        self.assertTrue(all(': pass' in line for line in lines))

    def test_suite_from_command_line(self):
        output = self.call('ggc', '--genus', '8')
        self.assertTrue(output.startswith('suite ggc: pass'))

    def test_unknown_suite(self):
        with self.assertRaises(CommandError) as context:
            self.call('wilf')
        self.assertEqual(context.exception.returncode, 1)

    def test_json(self):
        data = json.loads(self.call('ggc', genus=7, format='json'))
        self.assertEqual(len(data), 1)
        self.assertEqual(data[0]['suite'], 'ggc')
        self.assertTrue(data[0]['passed'])

    def test_failure(self):
        '''
        A failing suite exits with 3
        '''
        failed = SuiteResult('counts', 3)
        failed.check(False, 'genus 3: explored 5, known 4')
        patched = 'sgtree.utils.management.commands.verify.run_suite'
        out = StringIO()
        with mock.patch(patched, return_value=failed):
            with self.assertRaises(CommandError) as context:
                call_command('verify', 'counts', stdout=out)
        self.assertEqual(context.exception.returncode, 3)
        self.assertIn('  genus 3: explored 5, known 4', out.getvalue())
