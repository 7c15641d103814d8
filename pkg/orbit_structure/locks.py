"""
Cycles of the orbit graph and the locking relation along lock cycles.

A lock cycle is a simple cycle D_1, ..., D_N of equal-size cells in which
every consecutive pair induces S_M or MC_2. Walking from x in D_1 to the
forced partner in each next cell (incomparable across S_M, comparable
across MC_2) ends at some y in D_1; x locks y.
"""
import logging
from math import factorial

import networkx as nx

from .domain import CycleReport, LockCycleReport
from .services import classify_two_levels, lower_upper, orbit_graph, restriction_group

logger = logging.getLogger(__name__)


def _normalise_cycle(cycle):
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _steps(cycle):
    cycle = list(cycle)
    return list(zip(cycle, cycle[1:] + cycle[:1]))


def _step_kinds(sp, cycle):
    kinds = []
    for c, d in _steps(cycle):
        lower, upper = lower_upper(sp.poset, sp.cells[c], sp.cells[d])
        kind, partners = classify_two_levels(sp.poset, lower, upper)
        if kind is None or partners is None:
            return None
        kinds.append(kind)
    return tuple(kinds)


def classify_cycles(sp, og=None):
    """Every simple cycle of the orbit graph, normalised, with its lock flag."""
    og = orbit_graph(sp) if og is None else og
    cycles = sorted(_normalise_cycle(list(cycle)) for cycle in nx.simple_cycles(og.graph) if len(cycle) >= 3)
    reports = []
    for cycle in cycles:
        sizes = {len(sp.cells[c]) for c in cycle}
        lock = len(sizes) == 1 and min(sizes) >= 2 and _step_kinds(sp, cycle) is not None
        reports.append(CycleReport(cycle=cycle, lock=lock))
    return reports


def _partner(p, x, cell, comparable):
    partners = [y for y in cell if p.comparable(x, y) == comparable]
    return partners[0]


def lock_cycles(sp, og=None):
    p = sp.poset
    reports = []
    for report in classify_cycles(sp, og):
        if not report.lock:
            continue
        steps = _step_kinds(sp, report.cycle)
        locked = []
        for x in sp.cells[report.cycle[0]]:
            current = x
            for kind, (_, d) in zip(steps, _steps(report.cycle)):
                current = _partner(p, current, sp.cells[d], comparable=(kind == 'chains'))
            locked.append((x, current))
        reports.append(LockCycleReport(
            cycle=report.cycle, M=len(sp.cells[report.cycle[0]]), steps=steps, locked_pairs=tuple(locked)))
    logger.info(f"{len(reports)} lock cycles among the orbit-graph cycles")
    return reports


def locked_restriction_bound(sp, report):
    """(|restriction group on the first cell|, M!/(M-1)) for a lock cycle."""
    order = restriction_group(sp, sp.cells[report.cycle[0]]).order()
    return order, factorial(report.M) // (report.M - 1)
