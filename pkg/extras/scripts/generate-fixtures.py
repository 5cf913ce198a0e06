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
Regenerates the fixtures of the tree app.

* genus-counts.json: the counts up to --oracle-genus come from the
  explicit-set enumeration, the rest from the bitstream exploration.
* seed-tables.json: three generations of seed tables below a few roots,
  computed on explicit sets only.

Run from the repository root, e.g.:
    python extras/scripts/generate-fixtures.py --genus 30 --workers 8
'''

import argparse
import json
import logging
import os
import sys

script_path = os.path.realpath(os.path.dirname(__file__))
sys.path.append(os.path.join(script_path, '..', '..'))

from sgtree.core.oracle import NaiveSemigroup
from sgtree.core.oracle import naive_children
from sgtree.core.oracle import naive_count
from sgtree.core.oracle import naive_jumps
from sgtree.core.oracle import naive_seeds
from sgtree.tree.explore import ExploreConfig
from sgtree.tree.explore import explore

logger = logging.getLogger('sgtree.custom')

FIXTURE_PATH = os.path.join(script_path, '..', '..', 'sgtree', 'tree', 'fixtures')

# (left elements, conductor)
SEED_TABLE_ROOTS = [
    ([0], 0),
    ([0], 2),
    ([0], 3),
    ([0], 4),
    ([0, 4], 7),
    ([0, 8, 16, 18, 19, 24, 26, 27], 30),
]


def genus_counts(genus, oracle_genus, workers):
    counts = explore(genus, ExploreConfig(workers=workers)).counts
    naive = naive_count(min(oracle_genus, genus))
    for g, count in naive.items():
        if counts[g] != count:
            raise SystemExit('genus {0}: explored {1}, enumerated {2}'.format(g, counts[g], count))
    return counts


def naive_table(ns):
    if ns.k == 0:
        return 'N'
    rows = []
    for order, window in enumerate(naive_jumps(ns)):
        seeds = naive_seeds(ns, order)
        rows.append(''.join('1' if ns.c + j in seeds else '0' for j in range(window)))
    return '[{0}]'.format('/'.join(rows))


def naive_tree(ns, depth):
    if ns.c == 0:
        semigroup = '{0,...}'
    else:
        semigroup = '{' + ','.join(str(x) for x in ns.left + [ns.c]) + ',...}'
    children = naive_children(ns) if depth else []
    return {'table': naive_table(ns),
            'semigroup': semigroup,
            'children': [naive_tree(child, depth - 1) for child in children]}


def write_fixture(name, data):
    path = os.path.join(FIXTURE_PATH, name)
    with open(path, 'w') as outfile:
        json.dump(data, outfile, indent=4)
        outfile.write('\n')
    logger.info('Wrote {0}'.format(path))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description='Regenerates the fixtures of the tree app')
    parser.add_argument('fixture', nargs='?', choices=('counts', 'seed-tables', 'all'),
                        default='all')
    parser.add_argument('--genus', type=int, default=30)
    parser.add_argument('--oracle-genus', type=int, default=12)
    parser.add_argument('--workers', type=int, default=1)
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO)
    if args.fixture in ('counts', 'all'):
        counts = genus_counts(args.genus, args.oracle_genus, args.workers)
        write_fixture('genus-counts.json',
                      [{'genus': g, 'count': count} for g, count in enumerate(counts)])
    if args.fixture in ('seed-tables', 'all'):
        write_fixture('seed-tables.json',
                      [naive_tree(NaiveSemigroup.from_elements(left, c), 3)
                       for left, c in SEED_TABLE_ROOTS])
