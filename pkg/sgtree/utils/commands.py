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
Base class of the sgtree management commands
'''

import logging
import sys

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from sgtree.core.exceptions import CapacityExceeded
from sgtree.core.exceptions import ConfigurationError
from sgtree.core.exceptions import SgtreeError
from sgtree.utils.constants import CAPACITIES
from sgtree.utils.constants import EXIT_OVERFLOW
from sgtree.utils.constants import EXIT_USAGE
from sgtree.utils.constants import EXIT_VIOLATION
from sgtree.utils.constants import OUTPUT_FORMATS

logger = logging.getLogger('sgtree.custom')


class PropertyViolation(Exception):
    '''
    A run found a Wilf violation or a failing check
    '''
    pass


class SgtreeCommand(BaseCommand):
    '''
    Maps the library errors to the exit codes

    * usage and configuration errors exit with 1
    * capacity overflows exit with 2
    * property violations exit with 3
    '''

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super(SgtreeCommand, self).create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(EXIT_USAGE, '{0}: error: {1}\n'.format(parser.prog, message))
            raise CommandError('Error: {0}'.format(message), returncode=EXIT_USAGE)

        parser.error = error
        return parser

    def add_run_arguments(self, parser):
        '''
        Options shared by the commands that produce a report
        '''
        parser.add_argument('--capacity', type=int, choices=CAPACITIES, default=None,
                            help='Largest conductor a node may have (bitstream width)')
        parser.add_argument('--format', choices=OUTPUT_FORMATS, default=None,
                            help='Output format')
        parser.add_argument('--out', default=None, metavar='PATH',
                            help='Write the output to a file instead of stdout')

    def execute(self, *args, **options):
        try:
            return super(SgtreeCommand, self).execute(*args, **options)
        except CapacityExceeded as error:
            logger.error(str(error))
            raise CommandError(str(error), returncode=EXIT_OVERFLOW)
        except PropertyViolation as error:
            raise CommandError(str(error), returncode=EXIT_VIOLATION)
        except (ConfigurationError, SgtreeError) as error:
            raise CommandError(str(error), returncode=EXIT_USAGE)
