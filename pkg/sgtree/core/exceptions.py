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
Errors raised by the sgtree library code.

The command line layer translates them into exit codes, see
sgtree.utils.commands
'''


class SgtreeError(Exception):
    '''
    Base class for all the errors of this package
    '''
    pass


class CapacityExceeded(SgtreeError):
    '''
    A bitstream or a conductor does not fit in the configured capacity

    The arguments are kept in self.args so the exception survives being
    pickled across worker processes.
    '''

    def __init__(self, capacity, genus=None):
        super(CapacityExceeded, self).__init__(capacity, genus)
        self.capacity = capacity
        self.genus = genus

    def __str__(self):
        if self.genus is None:
            return 'capacity of {0} bits exceeded'.format(self.capacity)
        return 'capacity of {0} bits exceeded at genus {1}'.format(self.capacity, self.genus)


class InvalidSemigroup(SgtreeError, ValueError):
    '''
    The input does not describe a numerical semigroup
    '''
    pass


class NotARightGenerator(InvalidSemigroup):
    '''
    The element to remove is not a right generator of the semigroup
    '''
    pass


class ParameterError(SgtreeError, ValueError):
    '''
    Parameters out of the range a construction accepts
    '''
    pass


class ConfigurationError(SgtreeError):
    '''
    Invalid run configuration
    '''
    pass
