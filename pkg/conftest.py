"""Pytest wiring: configure Django before the lefschetz tests are collected."""
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / 'solvsite'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'solvsite.settings')

import django  # noqa: E402

django.setup()
