# -*- coding: utf-8 -*-
'''
Lets pytest (with pytest-django absent) run the Django test cases
'''

import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sgtree.settings_test')
django.setup()
