import uuid
from pathlib import Path
from django.core.files.storage import default_storage
from django.core.files.base import ContentFile


def read_text(path):
    """Reads a UTF-8 poset file."""
    return Path(path).read_text(encoding='utf-8')


def archive_report(content, path_prefix='corpus/', ext='jsonl'):
    """
    Stores a report in the default storage (MEDIA_ROOT locally).
    Returns the storage path of the saved report.
    """
    filename = f"{uuid.uuid4()}.{ext}"
    file_path = f"{path_prefix}{filename}"
    return default_storage.save(file_path, ContentFile(content.encode('utf-8')))
