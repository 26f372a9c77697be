from django.apps import AppConfig


class ChernConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'chern'
    verbose_name = 'Chern classes'
