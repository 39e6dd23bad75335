"""Matrices over a FieldSpec with opaque string labels on both axes.

Row and column label sets must be disjoint: a LabeledMatrix doubles as
the standard representation [I | A] of a matroid whose basis-side
elements are the row labels, and in that reading every label names one
matroid element.  Entries are stored as integer encodings; the public
accessor hands back FieldElem values.

Rank is exact Gaussian elimination with first-nonzero pivoting in label
order, so repeated runs are bit-for-bit deterministic.  GF(2) matrices
take a packed-bitmask path; everything else runs the generic
elimination on encodings.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatch, InvalidArgs, LabelCollision, NotASubfield, UnknownLabel
from .galois import FieldElem, FieldSpec, is_tower_prefix


def _check_labels(rows: Sequence[str], cols: Sequence[str]) -> None:
    if len(set(rows)) != len(rows):
        raise LabelCollision(f"duplicate row label in {rows}")
    if len(set(cols)) != len(cols):
        raise LabelCollision(f"duplicate column label in {cols}")
    clash = set(rows) & set(cols)
    if clash:
        raise LabelCollision(f"labels on both sides: {sorted(clash)}")


class LabeledMatrix:
    __slots__ = ("field", "rows", "cols", "_data", "_row_pos", "_col_pos")

    def __init__(
        self,
        field: FieldSpec,
        rows: Sequence[str],
        cols: Sequence[str],
        entries: Sequence[Sequence["FieldElem | int"]],
    ):
        rows = tuple(str(r) for r in rows)
        cols = tuple(str(c) for c in cols)
        _check_labels(rows, cols)
        if len(entries) != len(rows):
            raise InvalidArgs(f"expected {len(rows)} entry rows, got {len(entries)}")
        data = []
        for r, entry_row in zip(rows, entries):
            if len(entry_row) != len(cols):
                raise InvalidArgs(f"row {r!r}: expected {len(cols)} entries")
            enc_row = []
            for v in entry_row:
                if isinstance(v, FieldElem):
                    if v.spec != field:
                        raise FieldMismatch(f"entry from {v.spec!r} in {field!r} matrix")
                    enc_row.append(v.enc)
                elif isinstance(v, int):
                    if not 0 <= v < field.order:
                        raise InvalidArgs(f"encoding {v} out of range for {field!r}")
                    enc_row.append(v)
                else:
                    raise InvalidArgs(f"entry {v!r} is neither FieldElem nor encoding")
            data.append(tuple(enc_row))
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = tuple(data)
        self._row_pos = {r: i for i, r in enumerate(rows)}
        self._col_pos = {c: j for j, c in enumerate(cols)}

    # -- access -----------------------------------------------------------

    def entry(self, row: str, col: str) -> FieldElem:
        return FieldElem(self.field, self.enc(row, col))

    def enc(self, row: str, col: str) -> int:
        try:
            return self._data[self._row_pos[row]][self._col_pos[col]]
        except KeyError as e:
            raise UnknownLabel(f"no entry at ({row!r}, {col!r})") from e

    def column_encs(self, col: str) -> tuple[int, ...]:
        try:
            j = self._col_pos[col]
        except KeyError as e:
            raise UnknownLabel(f"no column {col!r}") from e
        return tuple(row[j] for row in self._data)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def labels(self) -> frozenset[str]:
        return frozenset(self.rows) | frozenset(self.cols)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabeledMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"LabeledMatrix({self.field!r}, rows={list(self.rows)}, cols={list(self.cols)})"

    # -- structural operations ---------------------------------------------

    def submatrix(self, labels: Iterable[str]) -> "LabeledMatrix":
        """Rows and columns restricted to the given label set, original
        ordering preserved on both axes."""
        want = set(labels)
        unknown = want - set(self.rows) - set(self.cols)
        if unknown:
            raise UnknownLabel(f"labels not in matrix: {sorted(unknown)}")
        keep_rows = [r for r in self.rows if r in want]
        keep_cols = [c for c in self.cols if c in want]
        return self.submatrix_sides(keep_rows, keep_cols)

    def submatrix_sides(self, rows: Sequence[str], cols: Sequence[str]) -> "LabeledMatrix":
        ri = [self._row_pos[r] for r in rows]
        ci = [self._col_pos[c] for c in cols]
        data = [[self._data[i][j] for j in ci] for i in ri]
        return LabeledMatrix(self.field, rows, cols, data)

    def transpose(self) -> "LabeledMatrix":
        data = [
            [self._data[i][j] for i in range(len(self.rows))]
            for j in range(len(self.cols))
        ]
        return LabeledMatrix(self.field, self.cols, self.rows, data)

    def lift(self, target: FieldSpec) -> "LabeledMatrix":
        """Reinterpret every entry in a taller tower.  Encodings of
        subfield elements are unchanged by the canonical embedding, so
        the stored data moves verbatim."""
        if not is_tower_prefix(self.field, target):
            raise NotASubfield(f"{self.field!r} is not a tower prefix of {target!r}")
        return LabeledMatrix(target, self.rows, self.cols, self._data)

    def set_entry(self, row: str, col: str, value: "FieldElem | int") -> "LabeledMatrix":
        if isinstance(value, FieldElem):
            if value.spec != self.field:
                raise FieldMismatch(f"value from {value.spec!r}, matrix over {self.field!r}")
            enc = value.enc
        elif isinstance(value, int):
            if not 0 <= value < self.field.order:
                raise InvalidArgs(f"encoding {value} out of range")
            enc = value
        else:
            raise InvalidArgs(f"value {value!r} is neither FieldElem nor encoding")
        if row not in self._row_pos:
            raise UnknownLabel(f"no row {row!r}")
        if col not in self._col_pos:
            raise UnknownLabel(f"no column {col!r}")
        i, j = self._row_pos[row], self._col_pos[col]
        data = [list(r) for r in self._data]
        data[i][j] = enc
        return LabeledMatrix(self.field, self.rows, self.cols, data)

    def with_column(self, label: str, encs: Sequence[int]) -> "LabeledMatrix":
        if label in self._row_pos or label in self._col_pos:
            raise LabelCollision(f"label {label!r} already used")
        if len(encs) != len(self.rows):
            raise InvalidArgs("column length does not match row count")
        data = [list(r) + [e] for r, e in zip(self._data, encs)]
        return LabeledMatrix(self.field, self.rows, self.cols + (label,), data)

    def drop_columns(self, labels: Iterable[str]) -> "LabeledMatrix":
        gone = set(labels)
        unknown = gone - set(self.cols)
        if unknown:
            raise UnknownLabel(f"no columns {sorted(unknown)}")
        keep = [c for c in self.cols if c not in gone]
        return self.submatrix_sides(list(self.rows), keep)

    # -- rank ---------------------------------------------------------------

    def rank(self) -> int:
        if not self.rows or not self.cols:
            return 0
        # pivoting scans rows and columns in sorted label order so the
        # elimination trace is independent of storage order
        row_order = [self._row_pos[r] for r in sorted(self.rows)]
        col_order = [self._col_pos[c] for c in sorted(self.cols)]
        if self.field.order == 2:
            packed = []
            for i in row_order:
                row = self._data[i]
                m = 0
                for bit, j in enumerate(col_order):
                    if row[j]:
                        m |= 1 << bit
                packed.append(m)
            return rank_gf2(packed)
        mat = [[self._data[i][j] for j in col_order] for i in row_order]
        return _rank_generic(self.field, mat)


def submatrix_rank(A: LabeledMatrix, labels: Iterable[str]) -> int:
    """rank(A[X]) without materialising the submatrix; used by the
    subset-enumeration certifiers, where allocation cost would dominate."""
    want = frozenset(labels)
    unknown = want - A.labels()
    if unknown:
        raise UnknownLabel(f"labels not in matrix: {sorted(unknown)}")
    ri = [i for i, r in enumerate(A.rows) if r in want]
    ci = [j for j, c in enumerate(A.cols) if c in want]
    if not ri or not ci:
        return 0
    data = A._data
    if A.field.order == 2:
        vecs = []
        for i in ri:
            row = data[i]
            m = 0
            for bit, j in enumerate(ci):
                if row[j]:
                    m |= 1 << bit
            vecs.append(m)
        return rank_gf2(vecs)
    mat = [[data[i][j] for j in ci] for i in ri]
    return _rank_generic(A.field, mat)


def rank_gf2(masks: Iterable[int]) -> int:
    """Rank of GF(2) row vectors packed as ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in masks:
        while v:
            h = v.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = v
                rank += 1
                break
            v ^= p
    return rank


def _rank_generic(field: FieldSpec, mat: list[list[int]]) -> int:
    m = len(mat)
    n = len(mat[0]) if m else 0
    mul, sub, inv = field.mul_enc, field.sub_enc, field.inv_enc
    pivot_row = 0
    for j in range(n):
        hit = -1
        for i in range(pivot_row, m):
            if mat[i][j]:
                hit = i
                break
        if hit < 0:
            continue
        if hit != pivot_row:
            mat[pivot_row], mat[hit] = mat[hit], mat[pivot_row]
        pv = inv(mat[pivot_row][j])
        prow = mat[pivot_row]
        for i in range(pivot_row + 1, m):
            f = mat[i][j]
            if f:
                factor = mul(f, pv)
                row = mat[i]
                for jj in range(j, n):
                    if prow[jj]:
                        row[jj] = sub(row[jj], mul(factor, prow[jj]))
        pivot_row += 1
        if pivot_row == m:
            break
    return pivot_row
