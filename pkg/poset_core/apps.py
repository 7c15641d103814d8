from django.apps import AppConfig


class PosetCoreConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "poset_core"
