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

import json
import logging

from sgtree.core.exceptions import ParameterError

logger = logging.getLogger('sgtree.custom')


class ReportJsonEncoder(json.JSONEncoder):
    '''
    Custom JSON encoder.

    Reports and parameter records know how to turn themselves into
    dictionaries, json.dumps() only needs to ask them
    '''
    def default(self, obj):
        if hasattr(obj, 'to_dict'):
            return obj.to_dict()
        if hasattr(obj, '_asdict'):
            return obj._asdict()
        return json.JSONEncoder.default(self, obj)


def to_json(data):
    return json.dumps(data, cls=ReportJsonEncoder, indent=2, sort_keys=True)


def parse_integer_list(text, name='value'):
    '''
    Parses a comma separated list of integers, e.g. '19,26,27'

    :raise ParameterError: if an entry is not an integer
    '''
    try:
        values = [int(item) for item in text.replace(' ', '').split(',') if item]
    except ValueError:
        raise ParameterError("invalid {0} list '{1}'".format(name, text))
    if not values:
        raise ParameterError('empty {0} list'.format(name))
    return values


def parse_generators(text):
    '''
    Generators of a semigroup, all of them positive
    '''
    generators = parse_integer_list(text, 'generator')
    if min(generators) <= 0:
        raise ParameterError("generators must be positive, got '{0}'".format(text))
    return generators


def write_output(text, path=None, stream=None):
    '''
    Writes the text to a file if a path is given, otherwise to the stream

    :param stream: a django OutputWrapper or any object with write()
    '''
    if path:
        with open(path, 'w') as output:
            output.write(text + '\n')
        logger.info('Output written to {0}'.format(path))
    else:
        stream.write(text)
