import random

from conftest import rand_word

from freqlev import (
    EditOp,
    TrainingPair,
    classify_pair,
    ingest,
    iter_corpus,
    levenshtein,
    read_corpus,
)


def edits_only(ops):
    return [op for op in ops if op.kind != "match"]


class TestClassifyPair:
    def test_added_character(self):
        assert edits_only(classify_pair(TrainingPair("ax", "a"))) == [EditOp.insert("x")]

    def test_omitted_character(self):
        assert edits_only(classify_pair(TrainingPair("a", "ab"))) == [EditOp.delete("b")]

    def test_substitution_keyed_typed_then_intended(self):
        assert edits_only(classify_pair(TrainingPair("abd", "abc"))) == [
            EditOp.substitute("d", "c")
        ]

    def test_identical_words_contribute_nothing(self):
        assert edits_only(classify_pair(TrainingPair("abc", "abc"))) == []

    def test_edit_count_matches_distance(self):
        rng = random.Random(61)
        for _ in range(400):
            pair = TrainingPair(rand_word(rng, "abc", 7, 1), rand_word(rng, "abc", 7, 1))
            assert len(edits_only(classify_pair(pair))) == levenshtein(*pair)


class TestIngest:
    def test_empty_stream(self):
        counts = ingest([])
        assert counts.grand_total == 0
        assert counts.skipped_pairs == 0

    def test_repeated_insertion(self):
        counts = ingest([TrainingPair("ax", "a")] * 3)
        assert counts.insert == {"x": 3}
        assert counts.delete == {} and counts.substitute == {}
        assert counts.grand_total == 3

    def test_empty_sides_are_skipped_and_counted(self):
        counts = ingest(
            [TrainingPair("", "a"), TrainingPair("a", ""), TrainingPair("ab", "ab")]
        )
        assert counts.skipped_pairs == 2
        assert counts.grand_total == 0

    def test_order_independence(self):
        rng = random.Random(62)
        pairs = [
            TrainingPair(rand_word(rng, "abcd", 6, 1), rand_word(rng, "abcd", 6, 1))
            for _ in range(300)
        ]
        shuffled = pairs[:]
        rng.shuffle(shuffled)
        assert ingest(pairs) == ingest(shuffled)

    def test_per_pair_conservation(self):
        rng = random.Random(63)
        for _ in range(200):
            pair = TrainingPair(rand_word(rng, "abc", 6, 1), rand_word(rng, "abc", 6, 1))
            counts = ingest([pair])
            assert counts.grand_total == levenshtein(*pair)

    def test_split_and_merge_equals_single_pass(self):
        rng = random.Random(64)
        pairs = [
            TrainingPair(rand_word(rng, "abc", 6, 1), rand_word(rng, "abc", 6, 1))
            for _ in range(100)
        ]
        merged = ingest(pairs[:40]).merge(ingest(pairs[40:]))
        assert merged == ingest(pairs)


class TestCorpusParsing:
    def test_comments_blanks_and_records(self):
        lines = ["# header\n", "\n", "ax\ta\n", "  \n", "b\tbc\n"]
        assert list(iter_corpus(lines)) == [
            TrainingPair("ax", "a"),
            TrainingPair("b", "bc"),
        ]

    def test_malformed_lines_reported_with_numbers(self):
        malformed = []
        lines = ["ok\tok\n", "no-tab\n", "a\tb\tc\n"]
        pairs = list(iter_corpus(lines, malformed))
        assert pairs == [TrainingPair("ok", "ok")]
        assert [lineno for lineno, _ in malformed] == [2, 3]

    def test_read_corpus_file(self, tmp_path):
        path = tmp_path / "corpus.tsv"
        path.write_text("xy\tx\n# c\nbroken\n", encoding="utf-8")
        pairs, malformed = read_corpus(str(path))
        assert pairs == [TrainingPair("xy", "x")]
        assert malformed == [(3, "expected 2 tab-separated fields, got 1")]
