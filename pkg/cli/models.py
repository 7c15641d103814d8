from django.db import models

RUN_STATUS = [
    ("running", "Running"),
    ("passed", "Passed"),
    ("failed", "Failed"),
]


class CorpusRun(models.Model):
    started_at = models.DateTimeField(auto_now_add=True)
    finished_at = models.DateTimeField(null=True, blank=True)
    max_n = models.IntegerField()
    random_count = models.IntegerField(default=0)
    seed = models.BigIntegerField()
    jobs = models.IntegerField(default=1)
    posets_checked = models.IntegerField(default=0)
    violation_count = models.IntegerField(default=0)
    status = models.CharField(max_length=20, choices=RUN_STATUS, default="running")

    def __str__(self):
        return f"corpus run {self.pk} (n <= {self.max_n}, seed {self.seed}): {self.status}"


class InvariantViolation(models.Model):
    run = models.ForeignKey(CorpusRun, related_name='violations', on_delete=models.CASCADE)
    suite = models.CharField(max_length=100)
    poset_text = models.TextField(blank=True)
    message = models.TextField()

    def __str__(self):
        return f"{self.suite}: {self.message[:60]}"
