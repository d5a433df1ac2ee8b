import pytest

from lexboot.corpus import SenseId, load_corpus
from lexboot.errors import BadPassStamp, ParseError
from lexboot.lkb import (
    EMPTY,
    HEADER,
    LkbSnapshot,
    deserialize,
    format_triple,
    merge,
    serialize,
    similarity,
    targets,
)
from lexboot.patterns import RelationTriple

from conftest import GOLDEN


def sid(word, pos="noun", sense="1", source="T"):
    return SenseId(word, pos, sense, source)


def rt(word, label, target, pass_no=1, pattern="genus-hypernym"):
    return RelationTriple(sid(word), label, target, pass_no, pattern)


class TestSnapshot:
    def test_empty(self):
        assert len(EMPTY) == 0
        assert EMPTY.pass_completed == 0
        assert EMPTY.targets("anything", "HYPERNYM") == ()

    def test_duplicate_keys_keep_earliest_pass(self):
        snap = LkbSnapshot(
            [rt("a", "HYPERNYM", "b", pass_no=2), rt("a", "HYPERNYM", "b", pass_no=1)],
            pass_completed=2,
        )
        assert len(snap) == 1
        assert snap.triples[0].pass_no == 1

    def test_targets_merge_across_senses(self):
        snap = LkbSnapshot(
            [
                RelationTriple(sid("a", sense="1"), "PART", "x", 1, "that-has-part"),
                RelationTriple(sid("a", sense="2"), "PART", "y", 1, "that-has-part"),
                rt("a", "HYPERNYM", "z"),
            ],
            pass_completed=1,
        )
        assert snap.targets("a", "PART") == ("x", "y")
        assert targets(snap, "a", "PART") == ("x", "y")

    def test_pairs(self):
        snap = LkbSnapshot([rt("a", "HYPERNYM", "b"), rt("a", "PART", "c")], 1)
        assert snap.pairs("a") == {("HYPERNYM", "b"), ("PART", "c")}
        assert snap.pairs("zzz") == set()

    def test_has(self):
        snap = LkbSnapshot([rt("a", "HYPERNYM", "b")], 1)
        assert snap.has((sid("a"), "HYPERNYM", "b"))
        assert not snap.has((sid("a"), "HYPERNYM", "c"))

    def test_equality(self):
        one = LkbSnapshot([rt("a", "HYPERNYM", "b")], 1)
        two = LkbSnapshot([rt("a", "HYPERNYM", "b")], 1)
        other_pass = LkbSnapshot([rt("a", "HYPERNYM", "b")], 2)
        assert one == two
        assert one != other_pass


class TestMerge:
    def test_advances_pass_counter(self):
        snap = merge(EMPTY, [rt("a", "HYPERNYM", "b", pass_no=1)])
        assert snap.pass_completed == 1
        assert len(snap) == 1

    def test_empty_merge_still_advances(self):
        snap = merge(EMPTY, [])
        assert snap.pass_completed == 1
        assert len(snap) == 0

    def test_rejects_wrong_stamp(self):
        with pytest.raises(BadPassStamp):
            merge(EMPTY, [rt("a", "HYPERNYM", "b", pass_no=2)])

    def test_duplicates_keep_first_provenance(self):
        snap1 = merge(EMPTY, [rt("a", "HYPERNYM", "b", pass_no=1)])
        snap2 = merge(
            snap1, [rt("a", "HYPERNYM", "b", pass_no=2, pattern="of-pp-resolver")]
        )
        assert len(snap2) == 1
        kept = snap2.triples[0]
        assert kept.pass_no == 1
        assert kept.pattern == "genus-hypernym"

    def test_is_monotone(self):
        snap1 = merge(EMPTY, [rt("a", "HYPERNYM", "b", pass_no=1)])
        snap2 = merge(snap1, [rt("c", "PART", "d", pass_no=2)])
        assert {t.key() for t in snap1} <= {t.key() for t in snap2}


class TestSimilarity:
    CORPUS = load_corpus(
        "leaf\tn\t1\tT\tthe flat green part of a plant\n"
        "flower\tn\t1\tT\tthe colored part of a plant"
    )

    def test_text_overlap_counts(self):
        assert similarity(EMPTY, self.CORPUS, "leaf", "flower") == 2  # part, plant

    def test_pair_overlap_counts_double(self):
        snap = LkbSnapshot(
            [
                rt("leaf", "PART-OF", "plant"),
                rt("flower", "PART-OF", "plant"),
                rt("leaf", "HYPERNYM", "part"),
                rt("flower", "HYPERNYM", "part"),
            ],
            1,
        )
        assert similarity(snap, self.CORPUS, "leaf", "flower") == 2 * 2 + 2

    def test_unknown_words_score_zero(self):
        assert similarity(EMPTY, self.CORPUS, "ground", "flower") == 0

    def test_weights_configurable(self):
        assert similarity(EMPTY, self.CORPUS, "leaf", "flower", weights=(2, 0)) == 0
        assert similarity(EMPTY, self.CORPUS, "leaf", "flower", weights=(2, 3)) == 6

    def test_similarity_values_on_sample(self, sample_result, sample_corpus):
        snap = sample_result.snapshot
        assert similarity(snap, sample_corpus, "leaf", "flower") == 6
        assert similarity(snap, sample_corpus, "ground", "flower") == 0


class TestSerialize:
    def test_header_carries_pass(self):
        snap = merge(EMPTY, [rt("a", "HYPERNYM", "b", pass_no=1)])
        assert serialize(snap).splitlines()[0] == f"{HEADER} pass=1"

    def test_rows_are_sorted_and_seven_field(self, sample_result):
        lines = serialize(sample_result.snapshot).splitlines()[1:]
        assert lines == sorted(lines)
        assert all(len(line.split("\t")) == 7 for line in lines)

    def test_format_triple_shape(self):
        row = format_triple(rt("bronze", "HYPERNYM", "metal"))
        assert row == "bronze\tn\tT 1\tHYPERNYM\tmetal\t1\tgenus-hypernym"

    def test_round_trip_exact(self, sample_result):
        text = serialize(sample_result.snapshot)
        again = deserialize(text)
        assert serialize(again) == text
        assert again == sample_result.snapshot

    def test_golden_files_round_trip(self):
        for name in ("sample_pass1.lkb", "sample_final.lkb"):
            text = (GOLDEN / name).read_text()
            assert serialize(deserialize(text)) == text


class TestDeserialize:
    GOOD = f"{HEADER} pass=1\nbronze\tn\tT 1\tHYPERNYM\tmetal\t1\tgenus-hypernym\n"

    def test_happy_path(self):
        snap = deserialize(self.GOOD)
        assert snap.pass_completed == 1
        assert snap.targets("bronze", "HYPERNYM") == ("metal",)

    def test_missing_header(self):
        with pytest.raises(ParseError) as err:
            deserialize("bronze\tn\tT 1\tHYPERNYM\tmetal\t1\tx\n")
        assert err.value.line_no == 1

    def test_header_without_pass_uses_max_stamp(self):
        text = f"{HEADER}\nbronze\tn\tT 1\tHYPERNYM\tmetal\t2\tof-pp-resolver\n"
        assert deserialize(text).pass_completed == 2

    def test_blank_and_comment_lines_skipped(self):
        text = self.GOOD + "\n# trailing comment\n"
        assert len(deserialize(text)) == 1

    def test_wrong_field_count(self):
        with pytest.raises(ParseError) as err:
            deserialize(f"{HEADER} pass=1\nbronze\tn\tT 1\tHYPERNYM\tmetal\n")
        assert err.value.line_no == 2

    def test_bad_pos(self):
        bad = self.GOOD.replace("\tn\t", "\tx\t")
        with pytest.raises(ParseError):
            deserialize(bad)

    def test_bad_label(self):
        bad = self.GOOD.replace("HYPERNYM", "FRIEND-OF")
        with pytest.raises(ParseError):
            deserialize(bad)

    def test_bad_citation(self):
        bad = self.GOOD.replace("T 1", "T1")
        with pytest.raises(ParseError):
            deserialize(bad)

    def test_bad_pass_stamp(self):
        bad = self.GOOD.replace("\t1\tgenus", "\tzero\tgenus")
        with pytest.raises(ParseError):
            deserialize(bad)
