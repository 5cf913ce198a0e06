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
Times the exploration with one and with several worker processes, e.g.:
    python extras/bench/bench_explore.py --genus 28 --workers 8
'''

import argparse
import logging
import os
import sys

script_path = os.path.realpath(os.path.dirname(__file__))
sys.path.append(os.path.join(script_path, '..', '..'))

from sgtree.tree.explore import ExploreConfig
from sgtree.tree.explore import explore

logger = logging.getLogger('sgtree.custom')


def bench(genus, workers, eliahou=False):
    '''
    :return: (sequential seconds, parallel seconds, semigroups counted)
    '''
    sequential = explore(genus, ExploreConfig(workers=1, eliahou=eliahou))
    parallel = explore(genus, ExploreConfig(workers=workers, eliahou=eliahou))
    if sequential.counts != parallel.counts:
        raise SystemExit('the parallel run counted {0}, the sequential one {1}'.format(
            parallel.counts, sequential.counts))
    return sequential.wall_time, parallel.wall_time, sequential.total


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description='Exploration speedup')
    parser.add_argument('--genus', type=int, default=25)
    parser.add_argument('--workers', type=int, default=os.cpu_count() or 1)
    parser.add_argument('--eliahou', action='store_true')
    args = parser.parse_args()

    logging.basicConfig(level=logging.WARNING)
    one, many, total = bench(args.genus, args.workers, args.eliahou)
    print('genus {0}: {1} semigroups'.format(args.genus, total))
    print('1 worker:   {0:8.2f}s'.format(one))
    print('{0} workers: {1:8.2f}s'.format(args.workers, many))
    print('speedup:    {0:8.2f}'.format(one / many if many else float('inf')))
