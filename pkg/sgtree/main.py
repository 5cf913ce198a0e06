#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    sgtree.main
    ~~~~~~~~~~~

    Entry point of the sgtree console script. Creates the per-user settings
    file when it is missing and hands the remaining arguments over to the
    Django command dispatcher, e.g.

        sgtree explore --genus 20 --workers 4
        sgtree info 14,22,23 --floor 56

    :copyright: 2026 by the sgtree authors, see AUTHORS.
    :license: GNU AGPL, see LICENSE for more details.
"""

import base64
import optparse
import os
import sys

import django.conf
from django.core.management import execute_from_command_line

from sgtree import get_version


CONFIG_TEMPLATE = """#!/usr/bin/env python
# -*- coding: utf-8 -*-

from sgtree.settings_global import *

# Unused by the commands, but Django refuses to start without it
SECRET_KEY = %(default_key)r

# Largest conductor a node may have: 128 or 256
SGTREE_CAPACITY = 128

# Worker processes used by 'explore'
SGTREE_WORKERS = %(workers)d

# Output format: human, tsv or json
SGTREE_OUTPUT_FORMAT = 'human'

# Largest genus checked by each 'verify' suite
#SGTREE_VERIFY_GENUS = {'counts': 16, 'seeds': 16, 'ggc': 18, 'eliahou': 14, 'families': 0}
"""

KEY_LENGTH = 30


def process_options(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    parser = optparse.OptionParser(
        usage="%prog [options] command [command options]",
        description="Explore the tree of numerical semigroups")
    parser.disable_interspersed_args()
    parser.add_option(
        "-s", "--settings", help="Path to the sgtree configuration file.")
    parser.add_option(
        "--version", action="store_true",
        help="Show version and exit.")
    parser.add_option(
        "--show-config", action="store_true",
        help="Show configuration paths and exit.")

    opts, args = parser.parse_args(argv)
    if opts.version:
        print(get_version())
        sys.exit(0)
    if opts.show_config:
        print("Settings file: %s" % (opts.settings or get_user_config_path('sgtree', 'settings.py')))
        sys.exit(0)
    if not args:
        parser.print_help()
        sys.exit(1)

    return opts, args


def main(argv=None):
    opts, args = process_options(argv)

    settings_path = opts.settings
    if settings_path is None:
        settings_path = get_user_config_path('sgtree', 'settings.py')

    if not os.path.exists(settings_path):
        create_settings(settings_path)

    setup_django_environment(settings_path)
    execute_from_command_line(['sgtree'] + args)


def create_settings(settings_path):
    settings_module = os.path.dirname(settings_path)
    sys.stderr.write("* No settings file found. Creating one at %s\n" % settings_module)

    settings_content = CONFIG_TEMPLATE % dict(
        default_key=base64.b64encode(os.urandom(KEY_LENGTH)).decode('ascii'),
        workers=os.cpu_count() or 1)

    if settings_module and not os.path.exists(settings_module):
        os.makedirs(settings_module)

    with open(settings_path, 'w') as settings_file:
        settings_file.write(settings_content)


def setup_django_environment(settings_path):
    settings_file = os.path.basename(settings_path)
    settings_module_name = "".join(settings_file.split('.')[:-1])
    if '.' in settings_module_name:
        print("'.' is not an allowed character in the settings-file")
        sys.exit(1)
    settings_module_dir = os.path.dirname(settings_path)
    sys.path.append(settings_module_dir)
    os.environ[django.conf.ENVIRONMENT_VARIABLE] = '%s' % settings_module_name


def fs2unicode(s):
    if isinstance(s, str):
        return s
    fs_encoding = sys.getfilesystemencoding() or sys.getdefaultencoding()
    return s.decode(fs_encoding)


def get_user_config_path(*args):
    config_home = os.environ.get(
        'XDG_CONFIG_HOME', os.path.join(os.path.expanduser('~'), '.config'))

    return os.path.join(fs2unicode(config_home), *args)


if __name__ == "__main__":
    main()
