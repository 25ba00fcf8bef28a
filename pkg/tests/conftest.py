from fractions import Fraction

from hypothesis import settings, strategies as st

from limloc.core import FeasibleRegion, normalize_instance

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

F = Fraction


def pts(*xs):
    """Feasible-point region from literals like "0", "2/3"."""
    return FeasibleRegion.points(*xs)


def inst(agents, region, m=1):
    if not isinstance(region, FeasibleRegion):
        region = FeasibleRegion.from_pairs(region)
    return normalize_instance([F(a) for a in agents], region, m)


@st.composite
def grid_rationals(draw, denominator=24):
    d = draw(st.integers(1, denominator))
    return F(draw(st.integers(0, d)), d)


@st.composite
def regions(draw, denominator=24, max_intervals=4):
    k = draw(st.integers(1, max_intervals))
    pairs = []
    for _ in range(k):
        a = draw(grid_rationals(denominator))
        b = draw(st.one_of(st.just(a), grid_rationals(denominator)))
        pairs.append((min(a, b), max(a, b)))
    return FeasibleRegion.from_pairs(pairs)


@st.composite
def instances(draw, m=1, max_agents=6, denominator=24):
    agents = draw(st.lists(grid_rationals(denominator), min_size=max(1, m), max_size=max_agents))
    return normalize_instance(agents, draw(regions(denominator)), m)


# one PASS/FAIL line per acceptance criterion in the terminal summary
_CRITERIA: dict[int, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    if report.when == "call" or report.outcome != "passed":
        failed = report.outcome != "passed" or _CRITERIA.get(number) == "FAIL"
        _CRITERIA[number] = "FAIL" if failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:2d}: {_CRITERIA[number]}")
