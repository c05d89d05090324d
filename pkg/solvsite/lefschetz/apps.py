from django.apps import AppConfig


class LefschetzConfig(AppConfig):
    name = 'lefschetz'
    verbose_name = 'Hard Lefschetz toolkit for solvmanifolds'
