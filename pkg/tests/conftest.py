import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from plott import (
    ChoiceFunction,
    GroundSet,
    PartialOrder,
    SetMap,
    SimpleWord,
    enumerate_plott,
    join_of_words,
)

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

LETTERS = "abcdef"


def ground_of(n: int) -> GroundSet:
    return GroundSet(tuple(LETTERS[:n]))


_PLOTT_CACHE: dict[int, list[ChoiceFunction]] = {}


def plott_list(n: int) -> list[ChoiceFunction]:
    if n not in _PLOTT_CACHE:
        _PLOTT_CACHE[n] = list(enumerate_plott(ground_of(n), "geometry"))
    return _PLOTT_CACHE[n]


@st.composite
def words(draw, ground: GroundSet, min_size: int = 0) -> SimpleWord:
    letters = draw(st.permutations(range(ground.size)))
    k = draw(st.integers(min_size, ground.size))
    return SimpleWord(ground, tuple(letters[:k]))


@st.composite
def plott_functions(draw, ground: GroundSet) -> ChoiceFunction:
    ws = draw(st.lists(words(ground), max_size=4))
    return join_of_words(ws, ground)


@st.composite
def choice_functions(draw, ground: GroundSet) -> ChoiceFunction:
    table = [draw(st.sampled_from([b for b in range(a + 1) if b & ~a == 0])) for a in ground.subsets()]
    return ChoiceFunction(ground, tuple(table))


@st.composite
def set_maps(draw, source: GroundSet, target: GroundSet) -> SetMap:
    images = draw(st.lists(st.integers(0, target.size - 1), min_size=source.size, max_size=source.size))
    return SetMap(source, target, tuple(images))


@st.composite
def partial_orders(draw, ground: GroundSet) -> PartialOrder:
    # a random DAG oriented by a random permutation, then closed
    perm = draw(st.permutations(ground.symbols))
    pairs = [
        (perm[i], perm[j])
        for i, j in itertools.combinations(range(ground.size), 2)
        if draw(st.booleans())
    ]
    return PartialOrder.from_covers(ground, pairs)


@pytest.fixture
def abc():
    return ground_of(3)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        item.config._acceptance = getattr(item.config, "_acceptance", [])
        item.config._acceptance.append((doc, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = getattr(config, "_acceptance", [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for doc, outcome in rows:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {doc}")
