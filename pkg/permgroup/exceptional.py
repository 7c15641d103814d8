"""
Exceptional primitive groups: the primitive groups of degree n not
containing A_n whose order can reach 2^n, shipped as a versioned CSV with a
sha256 checksum file next to it.
"""
import csv
import hashlib
import io
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial

from django.conf import settings

from core.exact import at_most_power_of_two, factorial_lg_bound
from .domain import ExceptionalEntry
from .exceptions import TableIntegrityError

logger = logging.getLogger(__name__)

TABLE_DEGREES = (5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 23, 24)


def _read_table_bytes(path):
    with open(path, 'rb') as handle:
        return handle.read()


def _expected_checksum(path):
    with open(path, encoding='utf-8') as handle:
        return handle.read().split()[0].strip()


def parse_table(text):
    version = None
    rows = []
    for line in text.splitlines():
        if line.startswith('#'):
            key, _, value = line[1:].partition(':')
            if key.strip() == 'version':
                version = value.strip()
            continue
        if line.strip():
            rows.append(line)
    if version is None:
        raise TableIntegrityError("exceptional group table has no version comment")
    entries = []
    for record in csv.DictReader(io.StringIO("\n".join(rows))):
        entries.append(ExceptionalEntry(
            degree=int(record['degree']),
            name=record['name'],
            order=int(record['order']),
            lg_over_n_bound=Fraction(record['lg_over_n_bound']),
            transitivity_note=record['transitivity'],
        ))
    return version, tuple(entries)


@lru_cache(maxsize=None)
def load_table(path=None, checksum_path=None):
    path = path or settings.EXCEPTIONAL_TABLE_PATH
    checksum_path = checksum_path or settings.EXCEPTIONAL_TABLE_CHECKSUM_PATH
    content = _read_table_bytes(path)
    digest = hashlib.sha256(content).hexdigest()
    if digest != _expected_checksum(checksum_path):
        logger.error(f"checksum mismatch for {path}: {digest}")
        raise TableIntegrityError(f"checksum mismatch for exceptional group table {path}")
    version, entries = parse_table(content.decode('utf-8'))
    logger.info(f"loaded exceptional group table version {version} with {len(entries)} entries")
    return entries


def exceptional_lookup(degree):
    return [entry for entry in load_table() if entry.degree == degree]


def verify_entry(entry):
    """True iff order <= 2^(bound * degree) by exact integer comparison."""
    if entry.order < 1 or factorial(entry.degree) % entry.order:
        return False
    return at_most_power_of_two(entry.order, entry.lg_over_n_bound, entry.degree)


def verify_table():
    failures = [entry for entry in load_table() if not verify_entry(entry)]
    for entry in failures:
        logger.error(f"table entry {entry.name} of degree {entry.degree} violates its bound")
    return failures


def level_bound_constant(degree, precision=None):
    """
    The constant d with |H| <= 2^(d * degree) assumed for a primitive level
    action H that does not carry a factorial factor.

    Degrees up to 5 use lg(degree!)/degree rounded up, tabulated degrees the
    largest tabulated bound, all other degrees 1.
    """
    precision = precision or settings.LG_PRECISION
    if degree <= 5:
        return factorial_lg_bound(degree, precision)
    entries = exceptional_lookup(degree)
    if entries:
        return max(entry.lg_over_n_bound for entry in entries)
    return Fraction(1)
