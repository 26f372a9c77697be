from django.apps import AppConfig


class FibersConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'fibers'
    verbose_name = 'Kodaira fibers'
