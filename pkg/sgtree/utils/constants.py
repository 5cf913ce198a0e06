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


# Bitstream widths
DEFAULT_CAPACITY = 128
EXTENDED_CAPACITY = 256
CAPACITIES = (DEFAULT_CAPACITY, EXTENDED_CAPACITY)

# Output formats
FORMAT_HUMAN = 'human'
FORMAT_TSV = 'tsv'
FORMAT_JSON = 'json'
OUTPUT_FORMATS = (FORMAT_HUMAN, FORMAT_TSV, FORMAT_JSON)

# Exit codes of the management commands
EXIT_USAGE = 1
EXIT_OVERFLOW = 2
EXIT_VIOLATION = 3

# Verification suites
SUITE_COUNTS = 'counts'
SUITE_SEEDS = 'seeds'
SUITE_GGC = 'ggc'
SUITE_ELIAHOU = 'eliahou'
SUITE_FAMILIES = 'families'
SUITES = (SUITE_COUNTS, SUITE_SEEDS, SUITE_GGC, SUITE_ELIAHOU, SUITE_FAMILIES)

# Default genus bound of every suite, overridable in the settings
VERIFY_GENUS = {SUITE_COUNTS: 16,
                SUITE_SEEDS: 16,
                SUITE_GGC: 18,
                SUITE_ELIAHOU: 14,
                SUITE_FAMILIES: 0}

# Deepest level the render command draws
RENDER_MAX_DEPTH = 3
