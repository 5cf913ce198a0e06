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
Run configuration of the command line tools

Values given on the command line win, everything else comes from the
SGTREE_* entries of the settings file.
'''

import logging

from django.conf import settings

from sgtree.core.exceptions import ConfigurationError
from sgtree.tree.explore import ExploreConfig
from sgtree.utils.constants import CAPACITIES
from sgtree.utils.constants import DEFAULT_CAPACITY
from sgtree.utils.constants import FORMAT_HUMAN
from sgtree.utils.constants import OUTPUT_FORMATS

logger = logging.getLogger('sgtree.custom')


def _setting(name, default):
    return getattr(settings, name, default)


class RunConfig(object):
    '''
    Options shared by the management commands
    '''

    def __init__(self, command, max_genus=0, workers=1, capacity=DEFAULT_CAPACITY,
                 output_format=FORMAT_HUMAN, output_path=None, eliahou=False,
                 closed_form=True):
        self.command = command
        self.max_genus = max_genus
        self.workers = workers
        self.capacity = capacity
        self.output_format = output_format
        self.output_path = output_path
        self.eliahou = eliahou
        self.closed_form = closed_form
        self.validate()

    @classmethod
    def from_options(cls, command, options):
        '''
        Builds the configuration from the options dictionary of a command

        Options missing or set to None fall back to the settings.
        '''
        def pick(key, setting, default):
            value = options.get(key)
            if value is None:
                value = _setting(setting, default)
            return value

        return cls(command,
                   max_genus=options.get('genus') or 0,
                   workers=pick('workers', 'SGTREE_WORKERS', 1),
                   capacity=pick('capacity', 'SGTREE_CAPACITY', DEFAULT_CAPACITY),
                   output_format=pick('format', 'SGTREE_OUTPUT_FORMAT', FORMAT_HUMAN),
                   output_path=options.get('out'),
                   eliahou=bool(options.get('eliahou')),
                   closed_form=not options.get('no_closed_form'))

    def validate(self):
        '''
        :raise ConfigurationError: on the first invalid value
        '''
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigurationError('workers must be a positive integer, got {0}'.format(
                self.workers))
        if not isinstance(self.max_genus, int) or self.max_genus < 0:
            raise ConfigurationError('the genus must be a non-negative integer, got {0}'.format(
                self.max_genus))
        if self.capacity not in CAPACITIES:
            raise ConfigurationError('capacity must be one of {0}, got {1}'.format(
                ', '.join(str(c) for c in CAPACITIES), self.capacity))
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError('format must be one of {0}, got {1}'.format(
                ', '.join(OUTPUT_FORMATS), self.output_format))
        return self

    def explore_config(self):
        return ExploreConfig(workers=self.workers,
                             capacity=self.capacity,
                             eliahou=self.eliahou,
                             closed_form=self.closed_form)

    def __repr__(self):
        return ('RunConfig(command={0!r}, max_genus={1}, workers={2}, capacity={3}, '
                'format={4!r})').format(self.command, self.max_genus, self.workers,
                                        self.capacity, self.output_format)
