import sys
from pathlib import Path

import pytest

from lexboot.bootstrap import DEFAULT_CONFIG, run_passes, run_until_converged
from lexboot.corpus import load_corpus_path

TESTS_DIR = Path(__file__).parent
DATA = TESTS_DIR / "data"
GOLDEN = DATA / "golden"

sys.path.insert(0, str(TESTS_DIR))


@pytest.fixture(scope="session")
def sample_corpus():
    return load_corpus_path(str(DATA / "sample.tsv"))


@pytest.fixture(scope="session")
def chain_corpus():
    return load_corpus_path(str(DATA / "chain.tsv"))


@pytest.fixture(scope="session")
def sample_result(sample_corpus):
    return run_until_converged(sample_corpus, DEFAULT_CONFIG)


@pytest.fixture(scope="session")
def pass1_result(sample_corpus):
    return run_passes(sample_corpus, 1, DEFAULT_CONFIG)


@pytest.fixture(scope="session")
def entry_by_headword(sample_corpus):
    index = {e.id.headword: e for e in sample_corpus.entries}

    def get(headword):
        return index[headword]

    return get
