"""
Bundled census data: positive braid words for the knot records and Regina
strings for the graph-manifold fillings.

Files are JSON objects ``{"schema_version": 1, "records": [...]}``.  The bundled
files are pinned by SHA-256 so accidental edits are caught on load.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

import jsonschema

from .alexander import LSpaceAlexanderForm
from .braid import BraidWord
from .errors import InvariantError, NotLSpaceForm, SchemaError
from .graphmanifold import GraphManifoldPresentation, parse_regina

__all__ = [
    "KnotRecord",
    "GraphManifoldRecord",
    "load_dataset",
    "load_graph_manifolds",
    "COHORTS",
]

COHORTS = ("A", "T2minusA")

_BUILTIN = {
    "t2": ("t2.json", "b315fea25cd4313bb6209d0490819fe6ca0234da997441e664247b3db9b6b80e"),
    "table1": ("table1.json", "b31517cb234d88b315480a2ad30b006d544b995b3d601314b2d2440fd2fd5ea4"),
}

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

KNOT_RECORD_SCHEMA = {
    "type": "object",
    "required": ["manifold", "knot_census", "braid_word", "genus", "word_length",
                 "braid_index", "mfw_bound", "alexander_exponents", "cohort"],
    "additionalProperties": False,
    "properties": {
        "manifold": {"type": "string", "minLength": 1},
        "knot_census": {"type": "string"},
        "braid_word": _INT_LIST,
        "genus": {"type": "integer", "minimum": 0},
        "word_length": {"type": "integer", "minimum": 1},
        "braid_index": {"type": "integer", "minimum": 1},
        "mfw_bound": {"type": "integer", "minimum": 1},
        "alexander_exponents": _INT_LIST,
        "cohort": {"enum": list(COHORTS)},
    },
}

GRAPH_RECORD_SCHEMA = {
    "type": "object",
    "required": ["filling", "regina", "dagger"],
    "additionalProperties": False,
    "properties": {
        "filling": {"type": "string"},
        "regina": {"type": "string"},
        "dagger": {"type": "boolean"},
    },
}


def _file_schema(record_schema: dict) -> dict:
    return {
        "type": "object",
        "required": ["schema_version", "records"],
        "properties": {
            "schema_version": {"const": 1},
            "source": {"type": "string"},
            "records": {"type": "array", "items": record_schema},
        },
    }


@dataclass(frozen=True)
class KnotRecord:
    manifold: str
    knot_census: str
    braid_word: tuple[int, ...]
    genus: int
    word_length: int
    braid_index: int
    mfw_bound: int
    alexander_exponents: tuple[int, ...]
    cohort: str

    @classmethod
    def from_dict(cls, d: dict) -> "KnotRecord":
        return cls(
            manifold=d["manifold"],
            knot_census=d["knot_census"],
            braid_word=tuple(d["braid_word"]),
            genus=d["genus"],
            word_length=d["word_length"],
            braid_index=d["braid_index"],
            mfw_bound=d["mfw_bound"],
            alexander_exponents=tuple(d["alexander_exponents"]),
            cohort=d["cohort"],
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["braid_word"] = list(self.braid_word)
        out["alexander_exponents"] = list(self.alexander_exponents)
        return out

    @property
    def word(self) -> BraidWord:
        return BraidWord.from_letters(self.braid_word, self.braid_index)

    def validate(self) -> None:
        """Check the cross-field invariants; raise :class:`InvariantError` on the first violation."""
        name = self.manifold
        if self.word_length != len(self.braid_word):
            raise InvariantError(name, "word_length",
                                 f"{self.word_length} != length of braid_word ({len(self.braid_word)})")
        if not self.braid_word or 0 in self.braid_word:
            raise InvariantError(name, "braid_word", "must be a nonempty word of nonzero letters")
        top = max(abs(g) for g in self.braid_word) + 1
        if self.braid_index != top:
            raise InvariantError(name, "braid_index", f"{self.braid_index} != max letter + 1 ({top})")
        try:
            form = LSpaceAlexanderForm(self.alexander_exponents)
        except NotLSpaceForm as exc:
            raise InvariantError(name, "alexander_exponents", str(exc)) from None
        if self.genus != form.degree:
            raise InvariantError(name, "genus", f"{self.genus} != first Alexander exponent ({form.degree})")


@dataclass(frozen=True)
class GraphManifoldRecord:
    filling: str
    regina: str
    dagger: bool

    @property
    def presentation(self) -> GraphManifoldPresentation:
        return parse_regina(self.regina, self.filling)

    def to_dict(self) -> dict:
        return asdict(self)


def _read(source: str | Path, schema: dict) -> dict:
    name = str(source)
    if name in _BUILTIN:
        filename, digest = _BUILTIN[name]
        raw = resources.files("braidkit.data").joinpath(filename).read_bytes()
        got = hashlib.sha256(raw).hexdigest()
        if got != digest:
            raise SchemaError(f"bundled dataset {filename} fails its checksum ({got})")
    else:
        try:
            raw = Path(source).read_bytes()
        except OSError as exc:
            raise SchemaError(f"cannot read dataset {name!r}: {exc}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{name}: invalid JSON: {exc}") from None
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{name}: {where}: {exc.message}") from None
    return doc


def load_dataset(source: str | Path = "t2", cohort: str | None = None) -> list[KnotRecord]:
    """Load knot records from a builtin name (``"t2"``) or a JSON file path.

    ``cohort`` may be ``"A"``, ``"T2minusA"`` or ``None``/``"all"``.
    """
    doc = _read(source, _file_schema(KNOT_RECORD_SCHEMA))
    records = [KnotRecord.from_dict(d) for d in doc["records"]]
    seen = set()
    for r in records:
        if r.manifold in seen:
            raise InvariantError(r.manifold, "manifold", "duplicate record id")
        seen.add(r.manifold)
        r.validate()
    if cohort in (None, "all"):
        return records
    if cohort not in COHORTS:
        raise ValueError(f"unknown cohort {cohort!r}")
    return [r for r in records if r.cohort == cohort]


def load_graph_manifolds(source: str | Path = "table1") -> list[GraphManifoldRecord]:
    doc = _read(source, _file_schema(GRAPH_RECORD_SCHEMA))
    return [GraphManifoldRecord(**d) for d in doc["records"]]
