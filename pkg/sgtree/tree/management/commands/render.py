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

from sgtree.config.run import RunConfig
from sgtree.core.exceptions import ParameterError
from sgtree.core.semigroup import from_generators
from sgtree.core.semigroup import from_generators_with_floor
from sgtree.core.semigroup import low_rank_state
from sgtree.core.semigroup import naturals
from sgtree.tree.render import render
from sgtree.utils.commands import SgtreeCommand
from sgtree.utils.helpers import parse_generators
from sgtree.utils.helpers import parse_integer_list
from sgtree.utils.helpers import write_output


def root_from_options(options, capacity):
    '''
    The semigroup the drawing starts from, the naturals by default
    '''
    if options.get('low_rank'):
        if options.get('generators'):
            raise ParameterError('give either generators or --low-rank, not both')
        values = parse_integer_list(options['low_rank'], 'low rank')
        if len(values) > 3:
            raise ParameterError('--low-rank takes m[,u[,v]]')
        return low_rank_state(*values, capacity=capacity)
    if options.get('generators'):
        generators = parse_generators(','.join(options['generators']))
        if options.get('floor') is None:
            return from_generators(generators, capacity)
        return from_generators_with_floor(generators, options['floor'], capacity)
    return naturals(capacity)


class Command(SgtreeCommand):
    '''
    Draws the first generations below a semigroup
    '''

    help = 'Draws the tables of seeds of the descendants of a semigroup'

    def add_arguments(self, parser):
        parser.add_argument('generators', nargs='*',
                            help='Generators of the root, the naturals if none is given')
        parser.add_argument('--floor', type=int, default=None,
                            help='Add every integer from this one on')
        parser.add_argument('--low-rank', default=None, dest='low_rank', metavar='M[,U[,V]]',
                            help='Start from the semigroup of rank at most 3 with these jumps')
        parser.add_argument('--depth', type=int, default=2,
                            help='Number of generations to draw, 1 to 3')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options('render', options)
        root = root_from_options(options, config.capacity)
        write_output(render(root, options['depth']), config.output_path, self.stdout)
