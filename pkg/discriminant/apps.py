from django.apps import AppConfig


class DiscriminantConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'discriminant'
    verbose_name = 'Discriminant inequality'
