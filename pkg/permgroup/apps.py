from django.apps import AppConfig


class PermgroupConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "permgroup"
