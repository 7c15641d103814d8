from django.contrib import admin
from .models import CorpusRun, InvariantViolation

admin.site.register(CorpusRun)
admin.site.register(InvariantViolation)
