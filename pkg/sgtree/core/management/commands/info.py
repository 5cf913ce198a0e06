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
from sgtree.core.semigroup import describe
from sgtree.core.semigroup import from_generators
from sgtree.core.semigroup import from_generators_with_floor
from sgtree.core.semigroup import generator_notation
from sgtree.core.semigroup import kind
from sgtree.core.semigroup import primitives
from sgtree.core.semigroup import seed_table
from sgtree.utils.commands import SgtreeCommand
from sgtree.utils.constants import FORMAT_JSON
from sgtree.utils.helpers import parse_generators
from sgtree.utils.helpers import to_json
from sgtree.utils.helpers import write_output
from sgtree.wilf.eliahou import eliahou_constant
from sgtree.wilf.eliahou import params_from_state
from sgtree.wilf.eliahou import wilf_holds


def semigroup_info(state):
    '''
    Everything the info command shows, as a dictionary
    '''
    params = params_from_state(state)
    return {'semigroup': describe(state),
            'notation': generator_notation(state),
            'primitives': primitives(state),
            'kind': kind(state),
            'seeds': seed_table(state).to_string() if state.k else '',
            'c': state.c, 'm': state.m, 'u': state.u, 'v': state.v, 'g': state.g,
            'p': params.p, 'r': params.r, 'k': params.k, 'q': params.q, 'rho': params.rho,
            'wilf': wilf_holds(params),
            'eliahou_constant': eliahou_constant(params)}


def format_info(info):
    shown = dict((key, '-' if value is None else value) for key, value in info.items())
    return '\n'.join([
        'Semigroup: {0}'.format(info['semigroup']),
        'Generators: {0}'.format(' '.join(str(x) for x in info['primitives'])),
        'Kind: {0}'.format(info['kind']),
        'Seeds: {0}'.format(info['seeds']),
        'c={c} m={m} u={u} v={v} g={g}'.format(**shown),
        'p={p} r={r} k={k} q={q} rho={rho}'.format(**info),
        'Wilf inequality: {0} >= {1}'.format(info['k'] * info['p'], info['c']),
        'Eliahou constant: {0}'.format(info['eliahou_constant']),
    ])


class Command(SgtreeCommand):
    '''
    Shows the parameters of one semigroup
    '''

    help = 'Shows the parameters of the semigroup spanned by the given generators'

    def add_arguments(self, parser):
        parser.add_argument('generators', nargs='+',
                            help='Generators, separated by spaces or commas')
        parser.add_argument('--floor', type=int, default=None,
                            help='Add every integer from this one on')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options('info', options)
        generators = parse_generators(','.join(options['generators']))
        if options['floor'] is None:
            state = from_generators(generators, config.capacity)
        else:
            state = from_generators_with_floor(generators, options['floor'], config.capacity)

        info = semigroup_info(state)
        if config.output_format == FORMAT_JSON:
            text = to_json(info)
        else:
            text = format_info(info)
        write_output(text, config.output_path, self.stdout)
