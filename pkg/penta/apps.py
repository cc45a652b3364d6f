from django.apps import AppConfig


class PentaConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "penta"
    verbose_name = "Five-valued representation and algebra"
