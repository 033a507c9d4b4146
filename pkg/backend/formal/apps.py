from django.apps import AppConfig


class FormalConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'formal'
    verbose_name = 'Formal series, restriction and K-homology labels'
