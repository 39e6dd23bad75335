"""JSON instance files and seeded random instance generation.

An instance file is a JSON object with a field block, a matrix block
over that field, an optional task block, and an optional seed:

    {"field": {"p": 2, "tower": [{"deg": 2, "modulus": [1, 1, 1]}]},
     "matrix": {"rows": ["r0"], "cols": ["c0", "c1"], "entries": [[0, 1]]},
     "task": {"kind": "xfragile", "x": ["r0", "c0"]},
     "seed": 7}

Modulus coefficients are integer encodings in the field below the
extension step, constant term first, all deg+1 of them (so the leading
coefficient, always 1, is the last entry).
Matrix entries are integer encodings, row-major.  The matrix is read as
a standard representation: row labels are a basis, the ground set is
rows + cols.  Task kinds are "xfragile" {x}, "nfragile" {minor},
"pipeline" {minor}, and "relax" {contract, delete}; a minor is another
matrix block over the same field.  Parsing reports the JSON path of the
first offending value, so a bad entry in a large file is located
exactly.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import ClassVar, NamedTuple, Optional, Union

from .errors import (
    CapExceeded,
    Exhausted,
    InvalidArgs,
    InvalidField,
    LabelCollision,
    MalformedJson,
    SchemaViolation,
)
from .fragility import (
    PARTITION_CAP_DEFAULT,
    SUBSET_CAP_DEFAULT,
    is_N_fragile,
    is_X_fragile_matrix,
)
from .galois import FieldSpec, field_from_tower, field_of_order
from .matrices import LabeledMatrix
from .matroids import ReprMatroid, isolated


@dataclass(frozen=True)
class XFragileTask:
    kind: ClassVar[str] = "xfragile"
    x: frozenset[str]


@dataclass(frozen=True)
class NFragileTask:
    kind: ClassVar[str] = "nfragile"
    minor: ReprMatroid


@dataclass(frozen=True)
class RelaxTask:
    kind: ClassVar[str] = "relax"
    contract: frozenset[str]
    delete: frozenset[str]


@dataclass(frozen=True)
class PipelineTask:
    kind: ClassVar[str] = "pipeline"
    minor: ReprMatroid


Task = Union[XFragileTask, NFragileTask, RelaxTask, PipelineTask]


@dataclass(frozen=True)
class InstanceFile:
    field: FieldSpec
    matrix: LabeledMatrix
    task: Optional[Task] = None
    seed: Optional[int] = None


# ---------------------------------------------------------------------------
# schema walking


def _expect(obj, types, path: str, what: str):
    if not isinstance(obj, types) or (isinstance(obj, bool) and types is int):
        raise SchemaViolation(f"{path}: expected {what}, got {type(obj).__name__}")
    return obj


def _get(obj: dict, key: str, path: str):
    if key not in obj:
        raise SchemaViolation(f"{path}: missing key {key!r}")
    return obj[key]


def _check_keys(obj: dict, allowed: set[str], path: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise SchemaViolation(f"{path}: unexpected key {sorted(extra)[0]!r}")


def _field_from_json(obj, path: str) -> FieldSpec:
    _expect(obj, dict, path, "object")
    _check_keys(obj, {"p", "tower"}, path)
    p = _expect(_get(obj, "p", path), int, f"{path}.p", "integer")
    tower_json = _expect(_get(obj, "tower", path), list, f"{path}.tower", "array")
    tower = []
    for i, step in enumerate(tower_json):
        sp = f"{path}.tower[{i}]"
        _expect(step, dict, sp, "object")
        _check_keys(step, {"deg", "modulus"}, sp)
        deg = _expect(_get(step, "deg", sp), int, f"{sp}.deg", "integer")
        mod = _expect(_get(step, "modulus", sp), list, f"{sp}.modulus", "array")
        coeffs = []
        for j, c in enumerate(mod):
            coeffs.append(_expect(c, int, f"{sp}.modulus[{j}]", "integer"))
        tower.append((deg, tuple(coeffs)))
    try:
        return field_from_tower(p, tower)
    except InvalidField as exc:
        raise InvalidField(f"{path}: {exc}") from None


def field_to_json(spec: FieldSpec) -> dict:
    return {
        "p": spec.p,
        "tower": [{"deg": d, "modulus": list(coeffs)} for d, coeffs in spec.steps],
    }


def _labels_from_json(obj, path: str) -> list[str]:
    _expect(obj, list, path, "array")
    out = []
    for i, lab in enumerate(obj):
        out.append(_expect(lab, str, f"{path}[{i}]", "string"))
    return out


def _matrix_from_json(obj, path: str, field: FieldSpec) -> LabeledMatrix:
    _expect(obj, dict, path, "object")
    _check_keys(obj, {"rows", "cols", "entries"}, path)
    rows = _labels_from_json(_get(obj, "rows", path), f"{path}.rows")
    cols = _labels_from_json(_get(obj, "cols", path), f"{path}.cols")
    entries = _expect(_get(obj, "entries", path), list, f"{path}.entries", "array")
    if len(entries) != len(rows):
        raise SchemaViolation(
            f"{path}.entries: {len(entries)} rows of entries for {len(rows)} row labels"
        )
    data = []
    for i, row in enumerate(entries):
        rp = f"{path}.entries[{i}]"
        _expect(row, list, rp, "array")
        if len(row) != len(cols):
            raise SchemaViolation(
                f"{rp}: {len(row)} entries for {len(cols)} column labels"
            )
        vals = []
        for j, v in enumerate(row):
            v = _expect(v, int, f"{rp}[{j}]", "integer")
            if not 0 <= v < field.order:
                raise SchemaViolation(
                    f"{rp}[{j}]: encoding {v} out of range for a field of order {field.order}"
                )
            vals.append(v)
        data.append(vals)
    try:
        return LabeledMatrix(field, rows, cols, data)
    except (InvalidArgs, LabelCollision) as exc:
        raise SchemaViolation(f"{path}: {exc}") from None


def matrix_to_json(A: LabeledMatrix) -> dict:
    return {
        "rows": list(A.rows),
        "cols": list(A.cols),
        "entries": [list(row) for row in A._data],
    }


def _label_set(obj, path: str, known: frozenset[str]) -> frozenset[str]:
    labs = _labels_from_json(obj, path)
    for i, lab in enumerate(labs):
        if lab not in known:
            raise SchemaViolation(f"{path}[{i}]: label {lab!r} not in the matrix")
    return frozenset(labs)


def _task_from_json(obj, path: str, field: FieldSpec, matrix: LabeledMatrix) -> Task:
    _expect(obj, dict, path, "object")
    kind = _expect(_get(obj, "kind", path), str, f"{path}.kind", "string")
    ground = frozenset(matrix.rows) | frozenset(matrix.cols)

    if kind == "xfragile":
        _check_keys(obj, {"kind", "x"}, path)
        return XFragileTask(_label_set(_get(obj, "x", path), f"{path}.x", ground))

    if kind in ("nfragile", "pipeline"):
        _check_keys(obj, {"kind", "minor"}, path)
        mm = _matrix_from_json(_get(obj, "minor", path), f"{path}.minor", field)
        off = (frozenset(mm.rows) | frozenset(mm.cols)) - ground
        if off:
            raise SchemaViolation(
                f"{path}.minor: label {sorted(off)[0]!r} not in the matrix"
            )
        minor = ReprMatroid(mm)
        return NFragileTask(minor) if kind == "nfragile" else PipelineTask(minor)

    if kind == "relax":
        _check_keys(obj, {"kind", "contract", "delete"}, path)
        contract = _label_set(_get(obj, "contract", path), f"{path}.contract", ground)
        delete = _label_set(_get(obj, "delete", path), f"{path}.delete", ground)
        both = contract & delete
        if both:
            raise SchemaViolation(
                f"{path}.delete: label {sorted(both)[0]!r} also appears in {path}.contract"
            )
        return RelaxTask(contract, delete)

    raise SchemaViolation(f"{path}.kind: unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# parse / serialize


def parse_instance(text: str) -> InstanceFile:
    """Parse a JSON instance file.

    Raises MalformedJson when the text is not JSON, SchemaViolation
    (with a $.path diagnostic) when the shape is wrong, and InvalidField
    when the field description does not define a field.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _expect(obj, dict, "$", "object")
    _check_keys(obj, {"field", "matrix", "task", "seed"}, "$")
    field = _field_from_json(_get(obj, "field", "$"), "$.field")
    matrix = _matrix_from_json(_get(obj, "matrix", "$"), "$.matrix", field)
    task = None
    if "task" in obj:
        task = _task_from_json(obj["task"], "$.task", field, matrix)
    seed = None
    if "seed" in obj:
        seed = _expect(obj["seed"], int, "$.seed", "integer")
    return InstanceFile(field, matrix, task, seed)


def serialize_instance(inst: InstanceFile) -> dict:
    """Turn an InstanceFile back into the JSON object parse_instance
    accepts.  parse(serialize(x)) reproduces x's canonical form."""
    out: dict = {
        "field": field_to_json(inst.field),
        "matrix": matrix_to_json(inst.matrix),
    }
    t = inst.task
    if isinstance(t, XFragileTask):
        out["task"] = {"kind": "xfragile", "x": sorted(t.x)}
    elif isinstance(t, NFragileTask):
        out["task"] = {"kind": "nfragile", "minor": matrix_to_json(t.minor.rep)}
    elif isinstance(t, PipelineTask):
        out["task"] = {"kind": "pipeline", "minor": matrix_to_json(t.minor.rep)}
    elif isinstance(t, RelaxTask):
        out["task"] = {
            "kind": "relax",
            "contract": sorted(t.contract),
            "delete": sorted(t.delete),
        }
    elif t is not None:
        raise InvalidArgs(f"not a task object: {t!r}")
    if inst.seed is not None:
        out["seed"] = inst.seed
    return out


# ---------------------------------------------------------------------------
# random generation


class GeneratedInstance(NamedTuple):
    instance: InstanceFile
    rejections: int


def _random_matrix(
    rng: random.Random, field: FieldSpec, rows: list[str], cols: list[str]
) -> LabeledMatrix:
    data = [[rng.randrange(field.order) for _ in cols] for _ in rows]
    return LabeledMatrix(field, rows, cols, data)


def gen_random(
    kind: str,
    *,
    seed: int,
    q: int = 2,
    rows: int = 3,
    cols: int = 3,
    x_rows: int = 1,
    x_cols: int = 1,
    minor_size: int = 2,
    max_attempts: int = 10000,
) -> GeneratedInstance:
    """Generate a random instance of the given kind by rejection
    sampling with the seeded generator random.Random(seed).

    Matrices are rows x cols over the field of order q with labels
    r0..r{rows-1} and c0..c{cols-1}.  For "xfragile" the distinguished
    set X is the first x_rows row labels plus the first x_cols column
    labels and the X block is forced to zero before testing.  For
    "nfragile" and "pipeline" a minor of size minor_size is cut out of a
    random matroid by a random partition.  For "relax" the instance is a
    matroid fragile for the displayed coloop/loop pair (r0, c0).

    Returns the instance plus the number of rejected draws.  Raises
    Exhausted when max_attempts samples all fail the acceptance oracle,
    which signals improbable parameters rather than a bug.
    """
    if kind not in ("xfragile", "nfragile", "relax", "pipeline"):
        raise InvalidArgs(f"unknown instance kind {kind!r}")
    if rows < 0 or cols < 0:
        raise InvalidArgs("matrix sizes must be nonnegative")
    if max_attempts < 1:
        raise InvalidArgs("max_attempts must be positive")
    field = field_of_order(q)
    row_labels = [f"r{i}" for i in range(rows)]
    col_labels = [f"c{j}" for j in range(cols)]
    rng = random.Random(seed)

    if kind == "xfragile":
        if not 0 <= x_rows <= rows or not 0 <= x_cols <= cols:
            raise InvalidArgs("x_rows/x_cols out of range for the matrix shape")
        rest = rows + cols - x_rows - x_cols
        if rest > SUBSET_CAP_DEFAULT:
            raise CapExceeded(
                f"{rest} elements outside X exceeds the subset cap {SUBSET_CAP_DEFAULT}"
            )
        x = frozenset(row_labels[:x_rows]) | frozenset(col_labels[:x_cols])
        for attempt in range(max_attempts):
            A = _random_matrix(rng, field, row_labels, col_labels)
            if x_rows and x_cols:
                data = [list(r) for r in A._data]
                for i in range(x_rows):
                    for j in range(x_cols):
                        data[i][j] = 0
                A = LabeledMatrix(field, row_labels, col_labels, data)
            if is_X_fragile_matrix(A, x):
                inst = InstanceFile(field, A, XFragileTask(x), seed)
                return GeneratedInstance(inst, attempt)
        raise Exhausted(f"no X-fragile matrix in {max_attempts} attempts")

    if kind in ("nfragile", "pipeline"):
        if not 0 <= minor_size <= rows + cols:
            raise InvalidArgs("minor_size out of range for the ground set")
        rest = rows + cols - minor_size
        if rest > PARTITION_CAP_DEFAULT:
            raise CapExceeded(
                f"{rest} elements outside the minor exceeds the partition cap "
                f"{PARTITION_CAP_DEFAULT}"
            )
        ground = sorted(row_labels + col_labels)
        for attempt in range(max_attempts):
            A = _random_matrix(rng, field, row_labels, col_labels)
            M = ReprMatroid(A)
            keep = frozenset(rng.sample(ground, minor_size))
            outside = sorted(M.ground - keep)
            contract = frozenset(e for e in outside if rng.random() < 0.5)
            N = M.minor(contract, frozenset(outside) - contract)
            if is_N_fragile(M, N):
                task = NFragileTask(N) if kind == "nfragile" else PipelineTask(N)
                inst = InstanceFile(field, A, task, seed)
                return GeneratedInstance(inst, attempt)
        raise Exhausted(f"no fragile pair in {max_attempts} attempts")

    # relax: fragile for the displayed coloop/loop pair (r0, c0)
    if rows < 1 or cols < 1:
        raise InvalidArgs("relax instances need at least one row and one column")
    rest = rows + cols - 2
    if rest > PARTITION_CAP_DEFAULT:
        raise CapExceeded(
            f"{rest} elements outside the pair exceeds the partition cap "
            f"{PARTITION_CAP_DEFAULT}"
        )
    N = isolated({row_labels[0]}, {row_labels[0], col_labels[0]})
    for attempt in range(max_attempts):
        A = _random_matrix(rng, field, row_labels, col_labels)
        data = [list(r) for r in A._data]
        data[0][0] = 0
        A = LabeledMatrix(field, row_labels, col_labels, data)
        M = ReprMatroid(A)
        if is_N_fragile(M, N):
            task = RelaxTask(frozenset(row_labels[1:]), frozenset(col_labels[1:]))
            inst = InstanceFile(field, A, task, seed)
            return GeneratedInstance(inst, attempt)
    raise Exhausted(f"no relaxable pair in {max_attempts} attempts")
