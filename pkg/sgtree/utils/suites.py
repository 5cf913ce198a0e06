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
Verification suites comparing the bitstream code with the explicit-set
reference implementations and with the known closed forms
'''

import collections
import json
import logging
import os

from sgtree.core.exceptions import ParameterError
from sgtree.core.oracle import NaiveSemigroup
from sgtree.core.oracle import naive_count
from sgtree.core.oracle import naive_from_generators_with_floor
from sgtree.core.oracle import naive_from_state
from sgtree.core.oracle import naive_params
from sgtree.core.oracle import naive_seeds
from sgtree.core.oracle import naive_state
from sgtree.core.semigroup import from_generators_with_floor
from sgtree.core.semigroup import is_order_p_seed
from sgtree.core.semigroup import is_strong_generator
from sgtree.core.semigroup import jumps
from sgtree.core.semigroup import right_generators
from sgtree.core.semigroup import seed_table
from sgtree.tree.children import classify_child_seeds
from sgtree.tree.children import remove_right_generator
from sgtree.tree.counting import descendant_counts
from sgtree.tree.explore import ExploreConfig
from sgtree.tree.explore import explore
from sgtree.tree.explore import iter_semigroups
from sgtree.utils.constants import DEFAULT_CAPACITY
from sgtree.utils.constants import SUITE_COUNTS
from sgtree.utils.constants import SUITE_ELIAHOU
from sgtree.utils.constants import SUITE_FAMILIES
from sgtree.utils.constants import SUITE_GGC
from sgtree.utils.constants import SUITE_SEEDS
from sgtree.wilf.eliahou import child_params
from sgtree.wilf.eliahou import eliahou_constant
from sgtree.wilf.eliahou import params_from_state
from sgtree.wilf.eliahou import wilf_holds
from sgtree.wilf.families import ELIAHOU_SEMIGROUPS
from sgtree.wilf.families import bef_generators
from sgtree.wilf.families import delgado_parameters
from sgtree.wilf.families import expected_family_constant
from sgtree.wilf.families import hyperelliptic
from sgtree.wilf.families import iter_ef_parameters
from sgtree.wilf.families import multiplicity_three
from sgtree.wilf.families import near_ordinary

logger = logging.getLogger('sgtree.custom')

GENUS_COUNTS_FIXTURE = os.path.join(os.path.dirname(os.path.dirname(__file__)),
                                    'tree', 'fixtures', 'genus-counts.json')


class SuiteResult(object):
    '''
    Outcome of a suite: number of checks and the description of every
    failed one
    '''

    def __init__(self, name, genus):
        self.name = name
        self.genus = genus
        self.checks = 0
        self.failures = []

    def check(self, condition, message):
        self.checks += 1
        if not condition:
            self.failures.append(message)
            logger.error('{0}: {1}'.format(self.name, message))
        return condition

    @property
    def passed(self):
        return not self.failures

    def summary(self):
        status = 'pass' if self.passed else 'FAIL'
        return 'suite {0}: {1} ({2} checks, {3} failures)'.format(
            self.name, status, self.checks, len(self.failures))

    def to_dict(self):
        return {'suite': self.name,
                'genus': self.genus,
                'passed': self.passed,
                'checks': self.checks,
                'failures': self.failures}


def load_genus_counts():
    '''
    Known number of semigroups of each genus, as a list indexed by genus
    '''
    with open(GENUS_COUNTS_FIXTURE) as fixture:
        data = json.load(fixture)
    return [entry['count'] for entry in sorted(data, key=lambda entry: entry['genus'])]


def verify_counts(genus, capacity=DEFAULT_CAPACITY):
    result = SuiteResult(SUITE_COUNTS, genus)
    report = explore(genus, ExploreConfig(capacity=capacity))
    naive = naive_count(genus)
    known = load_genus_counts()
    for g in range(genus + 1):
        result.check(report.counts[g] == naive[g],
                     'genus {0}: explored {1}, enumerated {2}'.format(g, report.counts[g], naive[g]))
        if g < len(known):
            result.check(report.counts[g] == known[g],
                         'genus {0}: explored {1}, known {2}'.format(g, report.counts[g], known[g]))
    return result


def verify_seeds(genus, capacity=DEFAULT_CAPACITY):
    '''
    Bitstreams, children and seed tables against the explicit sets
    '''
    result = SuiteResult(SUITE_SEEDS, genus)
    for state in iter_semigroups(genus, capacity):
        ns = naive_from_state(state)
        windows = jumps(state)
        result.check(state == naive_state(ns, capacity), '{0}: G or S differ'.format(state))
        for order in range(state.k):
            expected = naive_seeds(ns, order)
            found = set(state.c + j for j in range(windows[order])
                        if is_order_p_seed(state, state.c + j, order))
            result.check(found == expected, '{0}: order {1} seeds {2}, expected {3}'.format(
                state, order, sorted(found), sorted(expected)))
        if state.g == genus:
            continue
        for element in right_generators(state):
            child = remove_right_generator(state, element)
            expected = naive_state(NaiveSemigroup(ns.gaps | set([element])), capacity)
            result.check(child == expected and child.m == expected.m and child.k == expected.k
                         and child.u == expected.u and child.v == expected.v,
                         '{0} minus {1}: child differs'.format(state, element))
            result.check(classify_child_seeds(state, element) == seed_table(child),
                         '{0} minus {1}: seed classification differs'.format(state, element))
    return result


def verify_ggc(genus, capacity=DEFAULT_CAPACITY):
    '''
    Sums of the closed form descendant counts of the semigroups up to
    `genus` against the explored counts up to genus + 3
    '''
    result = SuiteResult(SUITE_GGC, genus)
    counts = explore(genus + 3, ExploreConfig(capacity=capacity, closed_form=False)).counts
    sums = collections.defaultdict(lambda: [0, 0, 0])
    for state in iter_semigroups(genus, capacity):
        for generation, value in enumerate(descendant_counts(state)):
            sums[state.g][generation] += value
    for g in range(genus + 1):
        for generation in range(3):
            target = g + generation + 1
            result.check(sums[g][generation] == counts[target],
                         'genus {0}, generation {1}: {2} against {3}'.format(
                             g, generation + 1, sums[g][generation], counts[target]))
    return result


def verify_eliahou(genus, capacity=DEFAULT_CAPACITY):
    '''
    Incremental Eliahou parameters against the direct computation, and no
    Eliahou semigroup in the explored range
    '''
    result = SuiteResult(SUITE_ELIAHOU, genus)
    for state in iter_semigroups(genus - 1, capacity):
        if state.k < 2:
            continue
        params = params_from_state(state)
        for position, element in enumerate(right_generators(state)):
            child = remove_right_generator(state, element)
            updated = child_params(params, element - state.c,
                                   not is_strong_generator(state, element),
                                   params.r - position)
            result.check(updated == params_from_state(child),
                         '{0} minus {1}: {2} against {3}'.format(
                             state, element, updated, params_from_state(child)))

    report = explore(genus, ExploreConfig(capacity=capacity, eliahou=True))
    result.check(not report.wilf_violations, 'Wilf violations: {0}'.format(report.wilf_violations))
    if genus < ELIAHOU_SEMIGROUPS[0][2]:
        result.check(not report.eliahou_hits, 'unexpected hits: {0}'.format(report.eliahou_hits))
    return result


def family_params(generators, floor, capacity=DEFAULT_CAPACITY):
    '''
    Eliahou parameters of <generators>|floor, on explicit sets when the
    floor does not fit in the capacity
    '''
    if floor <= capacity:
        return params_from_state(from_generators_with_floor(generators, floor, capacity))
    return naive_params(naive_from_generators_with_floor(generators, floor))


def verify_families(genus=0, capacity=DEFAULT_CAPACITY):
    '''
    Eliahou constants of the known semigroups and families
    '''
    result = SuiteResult(SUITE_FAMILIES, genus)

    for generators, floor, expected_genus in ELIAHOU_SEMIGROUPS:
        state = from_generators_with_floor(generators, floor, capacity)
        params = params_from_state(state)
        result.check(state.g == expected_genus and eliahou_constant(params) == -1,
                     '<{0}>|{1}: genus {2}, E = {3}'.format(
                         generators, floor, state.g, eliahou_constant(params)))
        result.check(wilf_holds(params), '<{0}>|{1}: Wilf fails'.format(generators, floor))

    for t in range(8, 31):
        value = eliahou_constant(family_params(*bef_generators(t), capacity=capacity))
        result.check(value == (4 if t == 8 else -1), 'BEF_{0}: E = {1}'.format(t, value))

    for m, a, b in iter_ef_parameters(40):
        value = eliahou_constant(family_params((m, a, b), 4 * m, capacity))
        result.check(value == -1, 'EF({0},{1},{2}): E = {3}'.format(m, a, b, value))

    for j, epsilon in enumerate((0, 1, 4, 7)):
        m, g, c = delgado_parameters(4, 0, 0, j)
        generators, floor, _ = ELIAHOU_SEMIGROUPS[epsilon]
        result.check((m, g, g + 1, c) == tuple(generators) + (floor,),
                     'D^(0,{0})(4,0) = <{1},{2},{3}>|{4}'.format(j, m, g, g + 1, c))

    checks = []
    checks.extend(('hyperelliptic', g, hyperelliptic(g, capacity)) for g in range(2, 51))
    checks.extend(('near-ordinary', g, near_ordinary(g, capacity)) for g in range(5, 51))
    checks.extend(('three-two', t, multiplicity_three(t, 2, capacity)) for t in range(1, 21))
    checks.extend(('three-four', t, multiplicity_three(t, 4, capacity)) for t in range(1, 21))
    for family, parameter, state in checks:
        value = eliahou_constant(params_from_state(state))
        result.check(value == expected_family_constant(family, parameter),
                     '{0} {1}: E = {2}'.format(family, parameter, value))
    return result


SUITE_FUNCTIONS = {SUITE_COUNTS: verify_counts,
                   SUITE_SEEDS: verify_seeds,
                   SUITE_GGC: verify_ggc,
                   SUITE_ELIAHOU: verify_eliahou,
                   SUITE_FAMILIES: verify_families}


def run_suite(name, genus, capacity=DEFAULT_CAPACITY):
    '''
    :raise ParameterError: for an unknown suite name
    '''
    try:
        function = SUITE_FUNCTIONS[name]
    except KeyError:
        raise ParameterError("unknown suite '{0}'".format(name))
    logger.info('Running suite {0} up to genus {1}'.format(name, genus))
    return function(genus, capacity)

