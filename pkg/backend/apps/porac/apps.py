from django.apps import AppConfig

class PoracConfig(AppConfig):
    name = 'apps.porac'
    verbose_name = 'Fine-grained uncertainty and PORAC certification'
