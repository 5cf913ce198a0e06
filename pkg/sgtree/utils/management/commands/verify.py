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

import logging

from django.conf import settings

from sgtree.config.run import RunConfig
from sgtree.utils.commands import PropertyViolation
from sgtree.utils.commands import SgtreeCommand
from sgtree.utils.constants import FORMAT_JSON
from sgtree.utils.constants import SUITES
from sgtree.utils.constants import VERIFY_GENUS
from sgtree.utils.helpers import to_json
from sgtree.utils.helpers import write_output
from sgtree.utils.suites import run_suite

logger = logging.getLogger('sgtree.custom')


class Command(SgtreeCommand):
    '''
    Runs the self checks of the package, for use after changes to the
    bitstream code or on a new machine
    '''

    help = 'Cross checks the fast code against the reference implementations'

    def add_arguments(self, parser):
        parser.add_argument('suite', nargs='?', choices=SUITES + ('all', ), default='all',
                            help='Suite to run, all of them by default')
        parser.add_argument('--genus', type=int, default=None,
                            help='Largest genus checked, overrides the per suite default')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options('verify', options)
        defaults = getattr(settings, 'SGTREE_VERIFY_GENUS', VERIFY_GENUS)
        names = SUITES if options['suite'] == 'all' else (options['suite'], )

        results = []
        for name in names:
            genus = options['genus'] if options['genus'] is not None else defaults.get(name, 0)
            results.append(run_suite(name, genus, config.capacity))

        if config.output_format == FORMAT_JSON:
            text = to_json(results)
        else:
            lines = []
            for result in results:
                lines.append(result.summary())
                lines.extend('  ' + failure for failure in result.failures)
            text = '\n'.join(lines)
        write_output(text, config.output_path, self.stdout)

        failed = [result.name for result in results if not result.passed]
        if failed:
            raise PropertyViolation('failing suites: {0}'.format(', '.join(failed)))
