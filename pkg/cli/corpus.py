"""
Corpus verification: every invariant suite over the enumerated small posets
and a seeded batch of random ones.

Posets travel to the workers as poset-file text together with explicit caps,
so a worker process never depends on the caller's overrides.
"""
import inspect
import logging
from importlib import import_module

from joblib import Parallel, delayed

from catalog.enumeration import enumerate_small_posets
from catalog.services import random_poset
from orbit_structure.services import structured
from poset_core.services import format_poset, parse_poset

logger = logging.getLogger(__name__)

SUITE_APPS = ('permgroup', 'counting', 'orbit_structure', 'deconstruction', 'bounds')
RANDOM_MAX_N = 10


def collect_suites(apps=SUITE_APPS):
    """(per-poset suites, global suites), both keyed ``app.suite``."""
    poset_suites, global_suites = {}, {}
    for app in apps:
        module = import_module(f"{app}.invariants")
        for name, suite in getattr(module, 'POSET_SUITES', {}).items():
            poset_suites[f"{app}.{name}"] = suite
        for name, suite in getattr(module, 'SUITES', {}).items():
            global_suites[f"{app}.{name}"] = suite
    return poset_suites, global_suites


def select(suites, names):
    if not names:
        return dict(suites)
    return {name: suite for name, suite in suites.items() if name in names or name.split('.')[0] in names}


def corpus_posets(max_n, random_count=0, seed=0):
    """Poset-file texts: every class up to max_n elements, then the seeded random ones."""
    texts = []
    for n in range(1, max_n + 1):
        texts.extend(format_poset(p) for p in enumerate_small_posets(n))
    for offset in range(random_count):
        n = 2 + offset % (RANDOM_MAX_N - 1)
        p = random_poset(n, levels=1 + offset % 4, density=40, seed=seed + offset)
        texts.append(format_poset(p, comments=[f"random n={n} seed={seed + offset}"]))
    logger.info(f"corpus of {len(texts)} posets (n <= {max_n}, {random_count} random)")
    return texts


def _accepts(suite, name):
    return name in inspect.signature(suite).parameters


def check_poset(text, caps, names=None):
    """Runs the selected per-poset suites on one poset; returns (suite, poset text, message) triples."""
    suites, _ = collect_suites()
    p = parse_poset(text)
    sp = structured(p)
    violations = []
    for name, suite in select(suites, names).items():
        kwargs = {'sp': sp} if _accepts(suite, 'sp') else {}
        try:
            problems = suite(p, caps, **kwargs)
        except (ValueError, RuntimeError) as exc:
            problems = [f"raised {type(exc).__name__}: {exc}"]
        violations.extend((name, text, problem) for problem in problems)
    return violations


def run_global_suites(caps, seed, names=None):
    _, suites = collect_suites()
    violations = []
    for name, suite in select(suites, names).items():
        kwargs = {}
        if _accepts(suite, 'caps'):
            kwargs['caps'] = caps
        if _accepts(suite, 'seed'):
            kwargs['seed'] = seed
        try:
            problems = suite(**kwargs)
        except (ValueError, RuntimeError) as exc:
            problems = [f"raised {type(exc).__name__}: {exc}"]
        violations.extend((name, '', problem) for problem in problems)
    return violations


def verify_corpus(texts, caps, seed, jobs=1, names=None):
    """All violations, per-poset ones in corpus order followed by the global suites."""
    if jobs == 1:
        results = [check_poset(text, caps, names) for text in texts]
    else:
        results = Parallel(n_jobs=jobs, prefer="processes")(
            delayed(check_poset)(text, caps, names) for text in texts)
    violations = [violation for result in results for violation in result]
    violations.extend(run_global_suites(caps, seed, names))
    for suite, _, message in violations:
        logger.error(f"{suite}: {message}")
    return violations
