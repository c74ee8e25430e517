import functools

import pytest

from homcurve.grid import Grid, Origami, column_curve_moves
from homcurve.instances import (
    BP_COLUMN,
    BP_ORIGAMI,
    gen_bounding_pair,
    gen_disjoint_cobounding,
    gen_quasiflat,
    simplify_configuration,
)

TORUS = Origami((0,), (0,))


@functools.lru_cache(maxsize=None)
def bp(n):
    return gen_bounding_pair(n)


@functools.lru_cache(maxsize=None)
def qf(n):
    return gen_quasiflat(n)


@functools.lru_cache(maxsize=None)
def cob(g):
    return gen_disjoint_cobounding(g)


def all_fixtures():
    """(name, configuration) for every small generated fixture."""
    out = [(f"bp{n}", bp(n)) for n in (1, 2, 3)]
    out += [(f"cob{g}", cob(g)) for g in (0, 1, 2)]
    out += [(f"qf2-{name}", cfg) for name, cfg in zip(("12", "13", "23"), qf(2))]
    return out


def bumped_pair():
    """Two curves on the genus-3 grid with a removable bigon."""
    g = Grid(BP_ORIGAMI, 6)
    c1 = g.walk(g.cell(BP_COLUMN[0], 2, 0), "N" * 24)
    moves = column_curve_moves(g, BP_COLUMN, 4, {0: ("E", [3, 4]), 5: ("W", [5, 4])})
    c2 = g.walk(g.cell(BP_COLUMN[0], 4, 0), moves)
    return simplify_configuration(g.configuration(c1, c2))


@pytest.fixture
def bp2():
    return bp(2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
