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
Plain text drawing of the descendants of a semigroup, one table of seeds
per node
'''

from sgtree.core.exceptions import ParameterError
from sgtree.core.semigroup import describe
from sgtree.core.semigroup import right_generators
from sgtree.core.semigroup import seed_table
from sgtree.tree.children import remove_right_generator
from sgtree.utils.constants import RENDER_MAX_DEPTH

INDENT = '    '


def descendant_tree(state, depth):
    '''
    Nested (state, children) pairs down to `depth` generations
    '''
    if depth == 0:
        return (state, [])
    return (state, [descendant_tree(remove_right_generator(state, element), depth - 1)
                    for element in right_generators(state)])


def table_label(state):
    if state.k == 0:
        return 'N'
    return str(seed_table(state))


def render_lines(state, depth, with_elements=True):
    '''
    One line per node, children indented below their parent

    :param depth: number of generations drawn below the root, 1 to 3
    '''
    if not 1 <= depth <= RENDER_MAX_DEPTH:
        raise ParameterError('depth must be between 1 and {0}, got {1}'.format(
            RENDER_MAX_DEPTH, depth))
    lines = []
    pending = [(descendant_tree(state, depth), 0)]
    while pending:
        (node, children), level = pending.pop()
        line = INDENT * level + table_label(node)
        if with_elements:
            line += '  ' + describe(node)
        lines.append(line)
        pending.extend((child, level + 1) for child in reversed(children))
    return lines


def render(state, depth):
    return '\n'.join(render_lines(state, depth))
