from django.apps import AppConfig


class DeformationsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'deformations'
    verbose_name = 'Deformation counts'
