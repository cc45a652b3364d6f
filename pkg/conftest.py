import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "pentalogic.settings")
django.setup()
