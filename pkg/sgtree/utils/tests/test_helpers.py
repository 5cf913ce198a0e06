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
import os
import shutil
import tempfile

from django.core.management.base import OutputWrapper
from io import StringIO

from sgtree.core.exceptions import ParameterError
from sgtree.core.tests.testcase import SgtreeTestCase
from sgtree.tree.explore import explore
from sgtree.utils.helpers import parse_generators
from sgtree.utils.helpers import parse_integer_list
from sgtree.utils.helpers import to_json
from sgtree.utils.helpers import write_output
from sgtree.wilf.eliahou import EliahouParams


class ParseTestCase(SgtreeTestCase):
    '''
    Tests reading integer lists from the command line
    '''

    def test_integer_list(self):
        self.assertEqual(parse_integer_list('19,26,27'), [19, 26, 27])
        self.assertEqual(parse_integer_list('19, 26,27,'), [19, 26, 27])
        self.assertRaises(ParameterError, parse_integer_list, '19,x')
        self.assertRaises(ParameterError, parse_integer_list, ',')

    def test_generators(self):
        self.assertEqual(parse_generators('3,5'), [3, 5])
        self.assertRaises(ParameterError, parse_generators, '0,3')
        self.assertRaises(ParameterError, parse_generators, '-3,5')


class OutputTestCase(SgtreeTestCase):
    '''
    Tests the JSON encoder and the output destination
    '''

    def setUp(self):
        super(OutputTestCase, self).setUp()
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        super(OutputTestCase, self).tearDown()
        shutil.rmtree(self.folder)

    def test_json(self):
        data = json.loads(to_json({'params': EliahouParams(90, 19, 5, 5, 7, 4, 23)}))
        self.assertEqual(data['params']['rho'], 5)
        data = json.loads(to_json(explore(2)))
        self.assertEqual(data['counts'], {'0': 1, '1': 1, '2': 2})
        self.assertRaises(TypeError, to_json, object())

    def test_stream(self):
        out = StringIO()
        write_output('0 1', stream=OutputWrapper(out))
        self.assertEqual(out.getvalue(), '0 1\n')

    def test_file(self):
        path = os.path.join(self.folder, 'counts.txt')
        write_output('0 1', path=path)
        with open(path) as output:
            self.assertEqual(output.read(), '0 1\n')
