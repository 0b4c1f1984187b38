"""Shared fixtures: shipped files, small automata and random instances."""

import pytest

from automata import Bta, Rule, parse_bta
from config import FIXTURE_DIR, MINI_XHTML, ORACLE_DEFAULTS
from oracle import random_instance
from schema import load_unranked_schema, schema_to_bta
from trees import RankedAlphabet
from utils.errors import CapExceeded

XHTML_LABELS = ["a", "b", "body", "div", "h1", "head", "html", "li", "p", "title", "ul"]


def case_seeds(limit=None):
    """Seeds of a random suite, from config so suites can be scaled down."""
    count = ORACLE_DEFAULTS['MAX_CASES'] if limit is None else min(limit, ORACLE_DEFAULTS['MAX_CASES'])
    first = ORACLE_DEFAULTS['SEED']
    return list(range(first, first + count))


def all_accepting(alphabet: RankedAlphabet) -> Bta:
    rules = [Rule("top", symbol, ("top",) * arity) for symbol, arity in alphabet.symbols]
    return Bta(alphabet, ["top"], ["top"], rules)


def skip_on_cap(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except CapExceeded as e:
        pytest.skip(f"instance too large: {e}")


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture
def xhtml_path():
    return FIXTURE_DIR / MINI_XHTML


@pytest.fixture(scope="session")
def xhtml_schema():
    return load_unranked_schema(FIXTURE_DIR / MINI_XHTML)


@pytest.fixture(scope="session")
def xhtml_bta(xhtml_schema):
    return schema_to_bta(xhtml_schema)


@pytest.fixture
def ab_alphabet():
    return RankedAlphabet({"a": 1, "b": 2})


@pytest.fixture
def even_a():
    """Trees over a/1, eps with an even number of a's (deterministic-complete)."""
    return parse_bta(
        """
        alphabet: a/1
        final: even
        even <- eps
        odd <- a(even)
        even <- a(odd)
        """
    )


@pytest.fixture
def nondet_result(fixture_dir):
    return parse_bta((fixture_dir / "nondet_result.bta").read_text())


@pytest.fixture(params=case_seeds(limit=25))
def small_instance(request):
    return random_instance(request.param)
