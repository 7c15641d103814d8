from django.apps import AppConfig


class DeconstructionConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "deconstruction"
