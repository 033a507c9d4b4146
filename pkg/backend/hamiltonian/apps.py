from django.apps import AppConfig


class HamiltonianConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hamiltonian'
    verbose_name = 'Hamiltonian models and their quantisations'
