"""Per-character error frequencies: construction, smoothing, serialization.

An :class:`ErrorModel` holds three maps. ``f_insert[c]`` is the frequency of
typing an extra character ``c``, ``f_delete[c]`` of omitting a ``c`` that the
intended word contains, and ``f_substitute[(t, i)]`` of typing ``t`` where
``i`` was intended. Absent keys mean frequency 0. All stored values lie in
[0, 1), which keeps every weighted DP step cost strictly positive.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import json
import math
from typing import Iterable

from ._backend import kernels as _k

__all__ = [
    "ErrorCounts",
    "ErrorModel",
    "NormalizationMode",
    "deserialize",
    "from_counts",
    "load_model",
    "save_model",
    "serialize",
    "smooth",
    "zero_model",
]


def _check_symbol(c: object, where: str) -> str:
    if not isinstance(c, str) or len(c) != 1:
        raise ValueError(f"{where}: key {c!r} is not a single character")
    if 0xD800 <= ord(c) <= 0xDFFF:
        raise ValueError(f"{where}: key {c!r} is a surrogate half")
    return c


def _check_frequency(value: object, where: str) -> float:
    # bool is an int subclass; reject it explicitly.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{where}: value {value!r} is not a number")
    f = float(value)
    if not math.isfinite(f) or f < 0.0 or f >= 1.0:
        raise ValueError(f"{where}: frequency {f!r} is outside [0, 1)")
    return f


@dataclasses.dataclass(frozen=True)
class ErrorModel:
    """Three frequency maps; immutable, validated at construction.

    Substitution keys are directional ``(typed, intended)`` pairs and never
    pair a character with itself.
    """

    f_insert: dict[str, float]
    f_delete: dict[str, float]
    f_substitute: dict[tuple[str, str], float]

    def __post_init__(self) -> None:
        ins = {}
        for c, v in self.f_insert.items():
            ins[_check_symbol(c, "f_insert")] = _check_frequency(v, f"f_insert[{c!r}]")
        dele = {}
        for c, v in self.f_delete.items():
            dele[_check_symbol(c, "f_delete")] = _check_frequency(v, f"f_delete[{c!r}]")
        sub = {}
        for key, v in self.f_substitute.items():
            if not isinstance(key, tuple) or len(key) != 2:
                raise ValueError(f"f_substitute: key {key!r} is not a character pair")
            t, i = key
            _check_symbol(t, "f_substitute")
            _check_symbol(i, "f_substitute")
            if t == i:
                raise ValueError(f"f_substitute: key {key!r} pairs a character with itself")
            sub[key] = _check_frequency(v, f"f_substitute[{key!r}]")
        object.__setattr__(self, "f_insert", ins)
        object.__setattr__(self, "f_delete", dele)
        object.__setattr__(self, "f_substitute", sub)

    def insert_frequency(self, c: str) -> float:
        return self.f_insert.get(c, 0.0)

    def delete_frequency(self, c: str) -> float:
        return self.f_delete.get(c, 0.0)

    def substitute_frequency(self, typed: str, intended: str) -> float:
        return self.f_substitute.get((typed, intended), 0.0)

    @functools.cached_property
    def _ord_maps(self) -> tuple[dict[int, float], dict[int, float], dict[int, float]]:
        shift = _k.SUB_KEY_SHIFT
        return (
            {ord(c): f for c, f in self.f_insert.items()},
            {ord(c): f for c, f in self.f_delete.items()},
            {(ord(t) << shift) | ord(i): f for (t, i), f in self.f_substitute.items()},
        )

    def ord_maps(self) -> tuple[dict[int, float], dict[int, float], dict[int, float]]:
        """Codepoint-keyed views of the three maps, in kernel key format."""
        return self._ord_maps


def zero_model() -> ErrorModel:
    """Model with no recorded errors; every lookup returns 0."""
    return ErrorModel({}, {}, {})


@dataclasses.dataclass
class ErrorCounts:
    """Raw tallies of edit operations seen in a training corpus.

    ``skipped_pairs`` counts records that were dropped during ingestion
    (empty words, malformed lines) so they are never lost silently.
    """

    insert: dict[str, float] = dataclasses.field(default_factory=dict)
    delete: dict[str, float] = dataclasses.field(default_factory=dict)
    substitute: dict[tuple[str, str], float] = dataclasses.field(default_factory=dict)
    skipped_pairs: int = 0

    @property
    def insert_total(self) -> float:
        return sum(self.insert.values())

    @property
    def delete_total(self) -> float:
        return sum(self.delete.values())

    @property
    def substitute_total(self) -> float:
        return sum(self.substitute.values())

    @property
    def grand_total(self) -> float:
        return self.insert_total + self.delete_total + self.substitute_total

    def merge(self, other: "ErrorCounts") -> "ErrorCounts":
        """Commutative sum of two tallies; inputs are left untouched."""
        merged = ErrorCounts(
            dict(self.insert),
            dict(self.delete),
            dict(self.substitute),
            self.skipped_pairs + other.skipped_pairs,
        )
        for c, n in other.insert.items():
            merged.insert[c] = merged.insert.get(c, 0) + n
        for c, n in other.delete.items():
            merged.delete[c] = merged.delete.get(c, 0) + n
        for key, n in other.substitute.items():
            merged.substitute[key] = merged.substitute.get(key, 0) + n
        return merged


class NormalizationMode(enum.Enum):
    """Denominator used when turning counts into frequencies."""

    GRAND = "grand"
    CATEGORY = "category"


def from_counts(
    counts: ErrorCounts,
    mode: NormalizationMode = NormalizationMode.GRAND,
) -> ErrorModel:
    """Normalize tallies into an ErrorModel.

    GRAND divides every count by the grand total; CATEGORY divides each
    count by its own category's total. Raises ValueError when the grand
    total is zero or when any resulting frequency would reach 1.
    """
    grand = counts.grand_total
    if grand <= 0:
        raise ValueError("from_counts: grand total is zero, nothing to normalize")

    def _normalize(tallies: dict, total: float, name: str) -> dict:
        out = {}
        for key, n in tallies.items():
            if n < 0:
                raise ValueError(f"from_counts: {name}[{key!r}] count {n!r} is negative")
            if n == 0:
                continue
            f = n / total
            if f >= 1.0:
                raise ValueError(
                    f"from_counts: {name}[{key!r}] would get frequency {f!r}, not < 1"
                )
            out[key] = f
        return out

    if mode is NormalizationMode.GRAND:
        denominators = (grand, grand, grand)
    else:
        denominators = (counts.insert_total, counts.delete_total, counts.substitute_total)
    return ErrorModel(
        _normalize(counts.insert, denominators[0], "insert") if denominators[0] else {},
        _normalize(counts.delete, denominators[1], "delete") if denominators[1] else {},
        _normalize(counts.substitute, denominators[2], "substitute") if denominators[2] else {},
    )


def smooth(counts: ErrorCounts, k: float, alphabet: Iterable[str]) -> ErrorCounts:
    """Add-k smoothing over an alphabet; returns a new tally.

    Every symbol gains k on its insert and delete counts and every ordered
    pair of distinct symbols gains k on its substitution count, so the
    resulting model assigns a positive frequency to each such key.
    """
    if k <= 0:
        raise ValueError(f"smooth: k must be positive, got {k!r}")
    symbols = sorted(set(alphabet))
    if not symbols:
        raise ValueError("smooth: alphabet is empty")
    for c in symbols:
        _check_symbol(c, "smooth alphabet")
    smoothed = ErrorCounts(
        dict(counts.insert),
        dict(counts.delete),
        dict(counts.substitute),
        counts.skipped_pairs,
    )
    for c in symbols:
        smoothed.insert[c] = smoothed.insert.get(c, 0) + k
        smoothed.delete[c] = smoothed.delete.get(c, 0) + k
        for d in symbols:
            if c != d:
                smoothed.substitute[(c, d)] = smoothed.substitute.get((c, d), 0) + k
    return smoothed


def serialize(model: ErrorModel) -> bytes:
    """Encode a model as UTF-8 JSON; deterministic byte output."""
    doc = {
        "insert": dict(sorted(model.f_insert.items())),
        "delete": dict(sorted(model.f_delete.items())),
        "substitute": {t + i: f for (t, i), f in sorted(model.f_substitute.items())},
    }
    return (json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _reject_duplicate_keys(pairs: list[tuple[str, object]]) -> dict:
    obj: dict = {}
    for key, value in pairs:
        if key in obj:
            raise ValueError(f"duplicate key {key!r} in the same object")
        obj[key] = value
    return obj


def deserialize(data: bytes | str) -> ErrorModel:
    """Parse a UTF-8 JSON model document.

    Top-level keys are "insert", "delete" and "substitute"; each may be
    omitted and defaults to empty. Substitution keys are two-character
    strings, typed character first. Unknown top-level keys, duplicate keys,
    malformed pairs and out-of-range numbers are all rejected.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ValueError(f"model document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("model document must be a JSON object")
    unknown = sorted(set(doc) - {"insert", "delete", "substitute"})
    if unknown:
        raise ValueError(f"unknown top-level keys in model document: {unknown}")
    for section in ("insert", "delete", "substitute"):
        if section in doc and not isinstance(doc[section], dict):
            raise ValueError(f"model section {section!r} must be a JSON object")
    substitute = {}
    for key, value in doc.get("substitute", {}).items():
        if not isinstance(key, str) or len(key) != 2:
            raise ValueError(
                f"substitute key {key!r} must be exactly two characters (typed, intended)"
            )
        substitute[(key[0], key[1])] = value
    return ErrorModel(doc.get("insert", {}), doc.get("delete", {}), substitute)


def load_model(path: str) -> ErrorModel:
    with open(path, "rb") as fh:
        return deserialize(fh.read())


def save_model(model: ErrorModel, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(model))
