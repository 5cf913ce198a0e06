#!/usr/bin/env python
import os
import sys

from django.core.management import execute_from_command_line

from sgtree.main import create_settings, get_user_config_path, setup_django_environment

if __name__ == "__main__":
    if 'test' in sys.argv[1:2]:
        os.environ.setdefault("DJANGO_SETTINGS_MODULE", "sgtree.settings_test")
    else:
        settings_path = get_user_config_path('sgtree', 'settings.py')
        if not os.path.exists(settings_path):
            create_settings(settings_path)
        setup_django_environment(settings_path)

    execute_from_command_line(sys.argv)
