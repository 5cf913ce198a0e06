#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Setup script for sgtree

    :copyright: 2026 by the sgtree authors, see AUTHORS.
    :license: GNU AGPL, see LICENSE for more details.
"""

from setuptools import setup
from setuptools import find_packages
from sgtree import get_version


with open('README.rst') as readme:
    long_description = readme.read()

with open('requirements.txt') as requirements_production:
    install_requires = [line for line in requirements_production.readlines()
                        if line.strip() and not line.startswith('#')]

setup(
    name='sgtree',
    description='Exploration of the tree of numerical semigroups with seed bitstreams',
    long_description=long_description,
    version=get_version(),
    license='AGPL3+',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    package_data={'sgtree': ['*/fixtures/*.json']},
    classifiers=[
        # http://pypi.python.org/pypi?%3Aaction=list_classifiers
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Framework :: Django',
        'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.6',
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'sgtree = sgtree.main:main',
        ],
    },
)
