import pytest

from lexboot.corpus import (
    SenseId,
    load_corpus,
    load_corpus_path,
    serialize_corpus,
)
from lexboot.errors import BadPos, DuplicateSense, MalformedLine

GOOD = "\n".join(
    [
        "# sample dictionary",
        "",
        "flower\tn\t1,n,1\tL\tthe part of a plant",
        "angle\tvi\t3,vi,1\tL\tto fish with a hook",
    ]
)


class TestLoading:
    def test_entries_in_file_order(self):
        corpus = load_corpus(GOOD)
        assert [e.id.headword for e in corpus.entries] == ["flower", "angle"]
        assert len(corpus) == 2

    def test_pos_codes_collapse(self):
        corpus = load_corpus(GOOD)
        assert corpus.entries[0].id.pos == "noun"
        assert corpus.entries[1].id.pos == "verb"
        assert corpus.entries[1].pos_code == "vi"

    def test_headword_lowercased(self):
        corpus = load_corpus("Flower\tn\t1\tL\ta plant part")
        assert corpus.entries[0].id.headword == "flower"

    def test_lookup(self):
        corpus = load_corpus(GOOD)
        assert corpus.lookup("flower")[0].definition == "the part of a plant"
        assert corpus.lookup("nope") == ()

    def test_accepts_iterable_of_lines(self):
        corpus = load_corpus(iter(GOOD.splitlines()))
        assert len(corpus) == 2

    def test_fixture_files_load(self):
        from conftest import DATA

        assert len(load_corpus_path(str(DATA / "sample.tsv"))) == 17
        assert len(load_corpus_path(str(DATA / "chain.tsv"))) == 3


class TestValidation:
    def test_wrong_field_count(self):
        with pytest.raises(MalformedLine) as err:
            load_corpus("flower\tn\t1,n,1\tthe part of a plant")
        assert err.value.line_no == 1

    def test_line_number_reported_after_comments(self):
        with pytest.raises(MalformedLine) as err:
            load_corpus("# ok\n\nbad line here")
        assert err.value.line_no == 3

    def test_bad_pos_code(self):
        with pytest.raises(BadPos):
            load_corpus("flower\tadj\t1\tL\tsome definition")

    def test_empty_headword(self):
        with pytest.raises(MalformedLine):
            load_corpus("\tn\t1\tL\tsome definition")

    def test_empty_definition(self):
        with pytest.raises(MalformedLine):
            load_corpus("flower\tn\t1\tL\t   ")

    def test_multi_letter_source(self):
        with pytest.raises(MalformedLine):
            load_corpus("flower\tn\t1\tLDOCE\tsome definition")

    def test_duplicate_sense(self):
        line = "flower\tn\t1,n,1\tL\tthe part of a plant"
        with pytest.raises(DuplicateSense):
            load_corpus(line + "\n" + line)

    def test_same_headword_different_sense_ok(self):
        text = (
            "flower\tn\t1,n,1\tL\tthe part of a plant\n"
            "flower\tn\t1,n,2\tL\ta blooming plant"
        )
        assert len(load_corpus(text)) == 2


class TestSerialization:
    def test_round_trip_preserves_comments_and_blanks(self):
        corpus = load_corpus(GOOD)
        assert serialize_corpus(corpus) == GOOD + "\n"

    def test_fixture_round_trip(self, sample_corpus):
        from conftest import DATA

        original = (DATA / "sample.tsv").read_text()
        assert serialize_corpus(sample_corpus) == original


class TestSenseId:
    def test_citation_is_source_first(self):
        sid = SenseId("flower", "noun", "1,n,1", "L")
        assert sid.citation() == "L 1,n,1"

    def test_pos_short(self):
        assert SenseId("x", "noun", "1", "L").pos_short() == "n"
        assert SenseId("x", "verb", "1", "L").pos_short() == "v"

    def test_selector(self):
        assert SenseId("flower", "noun", "1,n,1", "L").selector() == "flower/n/1,n,1"

    def test_ordering_is_total(self):
        a = SenseId("a", "noun", "1", "L")
        b = SenseId("b", "noun", "1", "L")
        assert a < b
