import json
import math
import random

import pytest
from conftest import rand_word

from freqlev import (
    BorderMode,
    ErrorModel,
    Suggestion,
    SynthSpec,
    TrainingPair,
    build,
    compare_rankers,
    ingest,
    levenshtein,
    rank_of_truth,
    suggest,
    synth_errors,
    synth_fixed_mix,
    zero_model,
)
from freqlev.evaluate import BUCKETS


def small_lexicon(rng, size=80):
    return build({rand_word(rng, "abcde", 6, 2) for _ in range(size)})


class TestSynthSpec:
    def test_rejects_negative_fields(self):
        with pytest.raises(ValueError):
            SynthSpec(zero_model(), trials=-1)
        with pytest.raises(ValueError):
            SynthSpec(zero_model(), trials=1, errors_per_word=-1)


class TestSynthErrors:
    def test_zero_errors_copies_the_word(self):
        rng = random.Random(81)
        lex = small_lexicon(rng)
        spec = SynthSpec(zero_model(), trials=50, errors_per_word=0,
                         seed=9, uniform_fallback=True)
        for erroneous, correct in synth_errors(lex, spec):
            assert erroneous == correct
            assert correct in lex

    def test_single_dominant_substitution(self):
        # Key order is (typed, intended): (b, a) rewrites an intended 'a' as 'b'.
        lex = build(["aa"])
        model = ErrorModel({}, {}, {("b", "a"): 0.999})
        spec = SynthSpec(model, trials=40, seed=4)
        for erroneous, correct in synth_errors(lex, spec):
            assert correct == "aa"
            assert erroneous in ("ba", "ab")

    def test_same_seed_reproduces_pairs(self):
        rng = random.Random(82)
        lex = small_lexicon(rng)
        spec = SynthSpec(zero_model(), trials=60, seed=123, uniform_fallback=True)
        assert synth_errors(lex, spec) == synth_errors(lex, spec)

    def test_seed_changes_output(self):
        rng = random.Random(83)
        lex = small_lexicon(rng)
        a = synth_errors(lex, SynthSpec(zero_model(), 60, seed=1, uniform_fallback=True))
        b = synth_errors(lex, SynthSpec(zero_model(), 60, seed=2, uniform_fallback=True))
        assert a != b

    def test_all_zero_model_without_fallback_rejected(self):
        rng = random.Random(84)
        lex = small_lexicon(rng)
        with pytest.raises(ValueError):
            synth_errors(lex, SynthSpec(zero_model(), trials=5))

    def test_empty_lexicon_rejected(self):
        with pytest.raises(ValueError):
            synth_errors(build([]), SynthSpec(zero_model(), 5, uniform_fallback=True))

    def test_category_proportions_match_sampling_distribution(self):
        # Every word contains 'a' and 'b', so each model key applies to each
        # trial word and the category masses are exactly 0.20 / 0.30 / 0.50.
        rng = random.Random(85)
        words = set()
        while len(words) < 300:
            tail = "".join(rng.choice("cdef") for _ in range(rng.randint(2, 5)))
            words.add("".join(rng.sample("ab" + tail, len(tail) + 2)))
        lex = build(words)
        model = ErrorModel(
            {"e": 0.10, "f": 0.10},
            {"a": 0.15, "b": 0.15},
            {("e", "a"): 0.25, ("f", "b"): 0.25},
        )
        trials = 12000
        counts = ingest(synth_errors(lex, SynthSpec(model, trials=trials, seed=5)))
        assert counts.grand_total == trials
        for total, share in (
            (counts.insert_total, 0.20),
            (counts.delete_total, 0.30),
            (counts.substitute_total, 0.50),
        ):
            sigma = math.sqrt(trials * share * (1 - share))
            assert abs(total - trials * share) < 3 * sigma


class TestSynthFixedMix:
    def test_exact_category_totals(self):
        rng = random.Random(86)
        lex = build({rand_word(rng, "abcdef", 5, 3) for _ in range(200)})
        pairs = synth_fixed_mix(lex, (20, 30, 50), seed=11)
        counts = ingest(pairs)
        assert counts.skipped_pairs == 0
        assert counts.insert_total == 20
        assert counts.delete_total == 30
        assert counts.substitute_total == 50
        assert counts.grand_total == 100
        for erroneous, correct in pairs:
            assert levenshtein(erroneous, correct) == 1

    def test_deterministic(self):
        rng = random.Random(87)
        lex = build({rand_word(rng, "abc", 5, 2) for _ in range(60)})
        assert synth_fixed_mix(lex, (5, 5, 5), seed=3) == synth_fixed_mix(
            lex, (5, 5, 5), seed=3
        )


class TestRankOfTruth:
    def test_head_and_absent(self):
        sugg = [Suggestion("cat", 0.0, 0, 1), Suggestion("cart", 1.0, 1, 2)]
        assert rank_of_truth(sugg, "cat") == 1
        assert rank_of_truth(sugg, "cart") == 2
        assert rank_of_truth(sugg, "dog") is None
        assert rank_of_truth([], "dog") is None

    def test_known_word_ranks_first(self):
        rng = random.Random(88)
        lex = small_lexicon(rng, 50)
        zm = zero_model()
        for truth in list(lex.words())[:15]:
            assert rank_of_truth(suggest(lex, truth, zm, k=5), truth) == 1


class TestCompareRankers:
    def test_zero_model_complement_gives_identical_histograms(self):
        rng = random.Random(89)
        lex = small_lexicon(rng)
        pairs = synth_errors(
            lex, SynthSpec(zero_model(), 150, seed=6, uniform_fallback=True)
        )
        report = compare_rankers(lex, pairs, zero_model(), BorderMode.COMPLEMENT)
        assert report.weighted == report.classic

    def test_histogram_mass_conservation(self):
        rng = random.Random(90)
        lex = small_lexicon(rng)
        model = ErrorModel({"a": 0.2}, {"b": 0.2}, {("a", "b"): 0.3})
        pairs = synth_errors(lex, SynthSpec(model, 120, seed=7))
        report = compare_rankers(lex, pairs, model)
        assert report.total == 120
        assert sum(report.weighted.values()) == 120
        assert sum(report.classic.values()) == 120
        assert set(report.weighted) == set(BUCKETS)

    def test_jobs_do_not_change_the_report(self):
        rng = random.Random(91)
        lex = small_lexicon(rng)
        model = ErrorModel({"a": 0.2}, {}, {("a", "b"): 0.4})
        pairs = synth_errors(lex, SynthSpec(model, 80, seed=8))
        lone = compare_rankers(lex, pairs, model, jobs=1)
        pooled = compare_rankers(lex, pairs, model, jobs=4)
        assert lone == pooled
        assert lone.to_json() == pooled.to_json()

    def test_json_shape(self):
        rng = random.Random(92)
        lex = small_lexicon(rng, 40)
        pairs = synth_errors(
            lex, SynthSpec(zero_model(), 30, seed=9, uniform_fallback=True)
        )
        report = compare_rankers(lex, pairs, zero_model(), BorderMode.COMPLEMENT)
        doc = json.loads(report.to_json())
        assert list(doc) == ["total", "weighted", "classic"]
        assert doc["total"] == 30
        for ranker in ("weighted", "classic"):
            assert list(doc[ranker]) == list(BUCKETS)
            for cell in doc[ranker].values():
                assert set(cell) == {"count", "percent"}
        percents = [cell["percent"] for cell in doc["weighted"].values()]
        assert sum(percents) == pytest.approx(100.0, abs=0.1)

    def test_report_text_carries_reference_values(self):
        report = compare_rankers(build(["ab"]), [], zero_model())
        text = report.to_text()
        for token in ("62.63", "21.05", "11.05", "5.26", "10.00", "8.00", "2.63", "1.57"):
            assert token in text
        assert "not reproduced" in text
