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
Depth first exploration of the semigroup tree

The tree is split at the semigroups of rank at most 2, which are counted in
closed form: one ordinary and floor(g/2) pseudo-ordinary semigroups of each
genus g > 0. Their children of rank at least 3 are the roots of independent
subtrees, explored in worker processes and merged at the end.

Inside a subtree the last generations are not visited: with the Eliahou
check off a node three generations above the target genus already knows
how many children, grandchildren and great-grandchildren it has; with the
check on, the children of the last expanded generation are only enumerated
through their Eliahou parameters.
'''

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures import as_completed

from sgtree.core.bitstream import iter_bits
from sgtree.core.bitstream import low_mask
from sgtree.core.exceptions import CapacityExceeded
from sgtree.core.exceptions import ConfigurationError
from sgtree.core.exceptions import ParameterError
from sgtree.core.semigroup import SemigroupState
from sgtree.core.semigroup import generator_notation
from sgtree.core.semigroup import low_rank_state
from sgtree.core.semigroup import naturals
from sgtree.core.semigroup import right_generators
from sgtree.tree.children import child_bits
from sgtree.tree.children import child_jumps
from sgtree.tree.children import remove_right_generator
from sgtree.tree.counting import counts_from_bits
from sgtree.utils.constants import CAPACITIES
from sgtree.utils.constants import DEFAULT_CAPACITY
from sgtree.wilf.eliahou import EliahouHit
from sgtree.wilf.eliahou import child_params
from sgtree.wilf.eliahou import eliahou_constant
from sgtree.wilf.eliahou import params_from_state
from sgtree.wilf.eliahou import wilf_holds

logger = logging.getLogger('sgtree.custom')


class ExploreConfig(object):
    '''
    Settings of one exploration

    :param workers: number of worker processes, 1 explores in this process
    :param capacity: largest conductor a node may have
    :param eliahou: check the Eliahou constant of every node of rank >= 3
    :param closed_form: count the last generations from the seeds instead
                        of visiting them
    '''

    def __init__(self, workers=1, capacity=DEFAULT_CAPACITY, eliahou=False, closed_form=True):
        if workers < 1:
            raise ConfigurationError('at least one worker is needed, got {0}'.format(workers))
        if capacity not in CAPACITIES:
            raise ConfigurationError('capacity must be one of {0}, got {1}'.format(
                CAPACITIES, capacity))
        self.workers = workers
        self.capacity = capacity
        self.eliahou = eliahou
        self.closed_form = closed_form

    def __repr__(self):
        return 'ExploreConfig(workers={0}, capacity={1}, eliahou={2}, closed_form={3})'.format(
            self.workers, self.capacity, self.eliahou, self.closed_form)


class ExplorationReport(object):
    '''
    Outcome of an exploration, or of one of its subtrees
    '''

    def __init__(self, max_genus):
        self.max_genus = max_genus
        self.counts = [0] * (max_genus + 1)
        self.eliahou_hits = []
        self.wilf_violations = []
        self.wall_time = 0.0

    @property
    def counts_by_genus(self):
        return dict(enumerate(self.counts))

    @property
    def total(self):
        return sum(self.counts)

    def merge(self, other):
        '''
        Adds the results of another report over the same genus range

        Hits are kept sorted, so the outcome does not depend on the order
        the subtrees finish in.
        '''
        if other.max_genus != self.max_genus:
            raise ParameterError('can not merge reports of different genus')
        self.counts = [a + b for a, b in zip(self.counts, other.counts)]
        self.eliahou_hits = sorted(self.eliahou_hits + other.eliahou_hits)
        self.wilf_violations = sorted(self.wilf_violations + other.wilf_violations)
        return self

    def to_dict(self):
        return {'max_genus': self.max_genus,
                'counts': dict((str(genus), count) for genus, count in enumerate(self.counts)),
                'eliahou_hits': [_hit_to_dict(hit) for hit in self.eliahou_hits],
                'wilf_violations': [_hit_to_dict(hit) for hit in self.wilf_violations],
                'wall_seconds': round(self.wall_time, 3)}


def _hit_to_dict(hit):
    result = {'semigroup': hit.description, 'genus': hit.genus, 'eliahou_constant': hit.value}
    result.update(hit.params._asdict())
    return result


def _inspect(report, params, genus, build_state):
    '''
    Records the node if its Eliahou constant is negative
    '''
    value = eliahou_constant(params)
    if value >= 0:
        return
    hit = EliahouHit(generator_notation(build_state()), genus, params, value)
    report.eliahou_hits.append(hit)
    logger.info('Eliahou semigroup {0} of genus {1}, E = {2}'.format(hit.description, genus, value))
    if not wilf_holds(params):
        report.wilf_violations.append(hit)
        logger.error('Wilf inequality fails for {0}: c = {1} > kp = {2}'.format(
            hit.description, params.c, params.k * params.p))


def _state(node, capacity):
    gaps, seeds, c, m, k, g, u, v, _ = node
    return SemigroupState(gaps, seeds, c, m, k, g, u=u, v=v, capacity=capacity)


def explore_subtree(root, max_genus, config=None):
    '''
    Explores the descendants of a node of rank at least 3 up to max_genus

    :param root: a SemigroupState of rank >= 3
    :return: ExplorationReport counting the root and its descendants
    '''
    if config is None:
        config = ExploreConfig()
    if root.k < 3:
        raise ParameterError('subtree roots need rank >= 3, got {0}'.format(root.k))

    report = ExplorationReport(max_genus)
    if root.g > max_genus:
        return report

    counts = report.counts
    capacity = config.capacity
    eliahou = config.eliahou
    tail = 3 if config.closed_form and not eliahou else 0
    enumerate_last = config.closed_form and eliahou

    root_params = params_from_state(root) if eliahou else None
    stack = [(root.gaps, root.seeds, root.c, root.m, root.k, root.g, root.u, root.v, root_params)]
    while stack:
        node = stack.pop()
        gaps, seeds, c, m, k, g, u, v, params = node
        counts[g] += 1
        if params is not None:
            _inspect(report, params, g, lambda: _state(node, capacity))

        residual = max_genus - g
        if residual == 0:
            continue
        if residual <= tail:
            descendants = counts_from_bits(seeds, k, m, u, v)
            for generation in range(min(residual, 3)):
                counts[g + 1 + generation] += descendants[generation]
            continue

        offsets = list(iter_bits(seeds & low_mask(m)))
        if enumerate_last and residual == 1:
            for position, offset in enumerate(offsets):
                weak = not (offset < u and seeds >> (m + offset) & 1)
                child = child_params(params, offset, weak, params.r - position)
                counts[g + 1] += 1
                _inspect(report, child, g + 1,
                         lambda: remove_right_generator(_state(node, capacity), c + offset))
            continue

        children = []
        for position, offset in enumerate(offsets):
            element = c + offset
            if element + 1 > capacity:
                raise CapacityExceeded(capacity, g + 1)
            child_gaps, child_seeds = child_bits(gaps, seeds, c, element)
            child_m, child_u, child_v = child_jumps(k, m, u, v, offset)
            child = None
            if params is not None:
                weak = not (offset < u and seeds >> (m + offset) & 1)
                child = child_params(params, offset, weak, params.r - position)
            children.append((child_gaps, child_seeds, element + 1, child_m, k + offset,
                             g + 1, child_u, child_v, child))
        stack.extend(reversed(children))

    return report


def low_rank_counts(max_genus):
    '''
    Number of semigroups of rank at most 2 of each genus
    '''
    return [1] + [1 + genus // 2 for genus in range(1, max_genus + 1)]


def _low_rank_parents(max_genus, capacity):
    '''
    Ordinary and pseudo-ordinary semigroups of genus below max_genus
    '''
    for genus in range(1, max_genus):
        yield low_rank_state(genus + 1, capacity=capacity)
        for u in range(2, genus // 2 + 2):
            yield low_rank_state(genus + 2 - u, u, capacity=capacity)


def partition_roots(max_genus, config=None):
    '''
    Roots of the subtrees the exploration is split into

    These are the children of rank >= 3 of the semigroups of rank <= 2: the
    rank 3 semigroups low_rank_state(m, u, 2), together with the semigroups
    whose last jumps are 1, ..., 1, 2 right after the multiplicity or u.
    Subtrees with a small genus are larger, they come first.

    :return: list of (SemigroupState, residual depth)
    '''
    if config is None:
        config = ExploreConfig()
    roots = []
    for parent in _low_rank_parents(max_genus, config.capacity):
        for element in right_generators(parent):
            if element + 1 > config.capacity:
                raise CapacityExceeded(config.capacity, parent.g + 1)
            if parent.k + element - parent.c < 3:
                continue
            roots.append(remove_right_generator(parent, element))
    roots.sort(key=lambda state: (state.g, -state.m, state.c))
    return [(state, max_genus - state.g) for state in roots]


def _explore_shard(root, max_genus, config):
    return explore_subtree(root, max_genus, config)


def explore(max_genus, config=None):
    '''
    Visits every numerical semigroup of genus at most max_genus

    :raise CapacityExceeded: if a visited node has a conductor beyond the
                             configured capacity
    '''
    if config is None:
        config = ExploreConfig()
    if max_genus < 0:
        raise ParameterError('the genus must be non-negative, got {0}'.format(max_genus))

    start = time.time()
    report = ExplorationReport(max_genus)
    report.counts = low_rank_counts(max_genus)
    roots = partition_roots(max_genus, config)
    logger.info('Exploring genus {0} from {1} subtrees with {2} worker(s)'.format(
        max_genus, len(roots), config.workers))

    if config.workers == 1 or len(roots) < 2:
        for index, (root, _) in enumerate(roots):
            report.merge(explore_subtree(root, max_genus, config))
            logger.debug('Subtree {0}/{1} done'.format(index + 1, len(roots)))
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            futures = [executor.submit(_explore_shard, root, max_genus, config)
                       for root, _ in roots]
            for done, future in enumerate(as_completed(futures), 1):
                partial = future.result()
                report.merge(partial)
                logger.info('Subtree {0}/{1} done, {2} semigroups'.format(
                    done, len(roots), partial.total))

    report.wall_time = time.time() - start
    logger.info('Explored {0} semigroups up to genus {1} in {2:.2f}s'.format(
        report.total, max_genus, report.wall_time))
    return report


def iter_semigroups(max_genus, capacity=DEFAULT_CAPACITY):
    '''
    Every semigroup of genus up to max_genus, depth first from the naturals

    Children come in increasing order of the removed generator.
    '''
    stack = [naturals(capacity)]
    while stack:
        state = stack.pop()
        yield state
        if state.g < max_genus:
            stack.extend(remove_right_generator(state, element)
                         for element in reversed(right_generators(state)))
