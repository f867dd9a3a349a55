import os

import django

# Same bootstrap as backend/manage.py, so pytest can run the Django test cases.
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "polyprod.settings")
django.setup()
