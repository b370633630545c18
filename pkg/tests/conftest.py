import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for tests.oracles imports

from stancelab import load_default_lexicons, make_fixture, save_corpus
from stancelab.fixtures import (default_emotion_lexicon_path,
                                default_sentiment_lexicon_path)

DATA_DIR = Path(__file__).parent / "data"


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(name): marks a test as one acceptance criterion")


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def lexicons():
    return load_default_lexicons()


@pytest.fixture(scope="session")
def sent_lex(lexicons):
    return lexicons[0]


@pytest.fixture(scope="session")
def emo_lex(lexicons):
    return lexicons[1]


@pytest.fixture(scope="session")
def sentiment_lexicon_path() -> str:
    return default_sentiment_lexicon_path()


@pytest.fixture(scope="session")
def emotion_lexicon_path() -> str:
    return default_emotion_lexicon_path()


@pytest.fixture(scope="session")
def synthetic_corpus():
    return make_fixture(seed=7, n_instances=200, affect_signal_strength=1.0)


@pytest.fixture(scope="session")
def synthetic_corpus_path(synthetic_corpus, tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("corpus") / "synthetic.jsonl"
    save_corpus(path, synthetic_corpus)
    return path


# -----------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion at session end
# -----------------------------------------------------------------------

_ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and report.when == "call":
        name = marker.args[0]
        if report.skipped:
            _ACCEPTANCE_RESULTS[name] = "SKIP"
        else:
            _ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{status}: {name}")
