from django.apps import AppConfig


class OrbitStructureConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "orbit_structure"
