#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Start script for sgtree, the same as the installed console script.

    :copyright: 2026 by the sgtree authors, see AUTHORS.
    :license: GNU AGPL, see LICENSE for more details.
"""

from sgtree.main import main

if __name__ == "__main__":
    main()
