"""Spelling correction with an error-frequency-weighted edit distance.

The classic metric counts single-character inserts, deletes and
substitutions; the weighted measure charges each operation 1 minus the
trained frequency of that exact error, so common typos score lower and the
intended word climbs the candidate ranking. The DP inner loops run in a
compiled extension when it is available and in pure Python otherwise; see
``freqlev.BACKEND`` for which one is active.
"""

from ._backend import BACKEND
from .distance import (
    BorderMode,
    EditOp,
    adjusted_matrix,
    adjusted_measure,
    backtrace,
    levenshtein,
    levenshtein_matrix,
)
from .evaluate import RankReport, SynthSpec, compare_rankers, rank_of_truth, synth_errors, synth_fixed_mix
from .lexicon import Lexicon, Suggestion, build, candidates_within, rank_by_classic, read_wordlist, suggest
from .model import (
    ErrorCounts,
    ErrorModel,
    NormalizationMode,
    deserialize,
    from_counts,
    load_model,
    save_model,
    serialize,
    smooth,
    zero_model,
)
from .trainer import TrainingPair, classify_pair, ingest, iter_corpus, read_corpus

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BorderMode",
    "EditOp",
    "ErrorCounts",
    "ErrorModel",
    "Lexicon",
    "NormalizationMode",
    "RankReport",
    "Suggestion",
    "SynthSpec",
    "TrainingPair",
    "adjusted_matrix",
    "adjusted_measure",
    "backtrace",
    "build",
    "candidates_within",
    "classify_pair",
    "compare_rankers",
    "deserialize",
    "from_counts",
    "ingest",
    "iter_corpus",
    "levenshtein",
    "levenshtein_matrix",
    "load_model",
    "rank_by_classic",
    "rank_of_truth",
    "read_corpus",
    "read_wordlist",
    "save_model",
    "serialize",
    "smooth",
    "suggest",
    "synth_errors",
    "synth_fixed_mix",
    "zero_model",
]
