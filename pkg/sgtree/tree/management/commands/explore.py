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

from sgtree.config.run import RunConfig
from sgtree.tree.explore import explore
from sgtree.utils.commands import PropertyViolation
from sgtree.utils.commands import SgtreeCommand
from sgtree.utils.constants import FORMAT_HUMAN
from sgtree.utils.constants import FORMAT_JSON
from sgtree.utils.helpers import to_json
from sgtree.utils.helpers import write_output

logger = logging.getLogger('sgtree.custom')


def format_report(report, output_format):
    '''
    Renders an exploration report as text

    The human format has one "genus count" line per genus followed by the
    Eliahou semigroups found, the tsv format only the counts.
    '''
    if output_format == FORMAT_JSON:
        return to_json(report)
    if output_format == FORMAT_HUMAN:
        lines = ['{0} {1}'.format(genus, count) for genus, count in enumerate(report.counts)]
        lines.extend('eliahou {0} genus={1} E={2}'.format(hit.description, hit.genus, hit.value)
                     for hit in report.eliahou_hits)
        return '\n'.join(lines)
    lines = ['genus\tcount']
    lines.extend('{0}\t{1}'.format(genus, count) for genus, count in enumerate(report.counts))
    return '\n'.join(lines)


class Command(SgtreeCommand):
    '''
    Counts the numerical semigroups up to a genus, optionally looking for
    Eliahou semigroups on the way
    '''

    help = 'Counts all numerical semigroups of genus up to --genus'

    def add_arguments(self, parser):
        parser.add_argument('--genus', type=int, required=True,
                            help='Largest genus to explore')
        parser.add_argument('--workers', type=int, default=None,
                            help='Number of worker processes')
        parser.add_argument('--eliahou', action='store_true', default=False,
                            help='Report the semigroups with a negative Eliahou constant')
        parser.add_argument('--no-closed-form', action='store_true', default=False,
                            dest='no_closed_form',
                            help='Visit the last generations instead of counting them')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options('explore', options)
        report = explore(config.max_genus, config.explore_config())

        write_output(format_report(report, config.output_format), config.output_path, self.stdout)
        if config.output_format == FORMAT_HUMAN:
            self.stderr.write('wall time {0:.3f}s'.format(report.wall_time))

        if report.wilf_violations:
            raise PropertyViolation('Wilf inequality fails for {0}'.format(
                ', '.join(hit.description for hit in report.wilf_violations)))
