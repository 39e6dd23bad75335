"""Matroids given by a standard representation [I | A] over a finite field.

A ReprMatroid wraps a LabeledMatrix A whose row labels are the
basis-side elements and whose column labels are the rest of the ground
set; the element vector of a row label is the corresponding unit
vector.  Rank queries reduce to |X on the row side| plus an exact rank
of the complementary block of A, and results are cached per matroid, so
the exhaustive certifications elsewhere in the package stay affordable.

Minors are computed by pivoting: contracting a column element first
pivots it onto the row side, deleting a row element first pivots it out
(coloops and loops degenerate to plain drops).  Pivot positions are
chosen as the first nonzero entry in label order, which keeps every
derived representation deterministic.  Duality transposes and negates
the representing block.

Everything here is exact and exponential where it says it is: `equals`
compares rank functions on all subsets and refuses ground sets larger
than the cap unless explicitly overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    GroundSetMismatch,
    InvalidArgs,
    InvalidMinorSpec,
    UnknownLabel,
)
from .galois import FieldSpec, make_prime_field
from .matrices import LabeledMatrix, rank_gf2
from .subsets import subsets_by_size

EQUALS_CAP_DEFAULT = 16


@dataclass(frozen=True)
class MinorSpec:
    """A partition certificate: contract the first set, delete the second."""

    contract: frozenset[str]
    delete: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "contract", frozenset(self.contract))
        object.__setattr__(self, "delete", frozenset(self.delete))
        if self.contract & self.delete:
            raise InvalidMinorSpec(
                f"contract and delete overlap: {sorted(self.contract & self.delete)}"
            )

    def validate(self, matroid: "ReprMatroid") -> None:
        outside = (self.contract | self.delete) - matroid.ground
        if outside:
            raise InvalidMinorSpec(f"labels outside the ground set: {sorted(outside)}")


def _pivot_inplace(
    field: FieldSpec,
    rows: list[str],
    cols: list[str],
    data: list[list[int]],
    i: int,
    j: int,
) -> None:
    """Exchange rows[i] and cols[j] in the standard representation.

    Requires data[i][j] != 0.  Rewrites every element vector in the new
    basis (rows - rows[i] + cols[j]) and swaps the two labels.
    """
    mul, sub, neg, inv = field.mul_enc, field.sub_enc, field.neg_enc, field.inv_enc
    ainv = inv(data[i][j])
    old = data[i]
    srow = [mul(x, ainv) for x in old]
    srow[j] = ainv
    for r in range(len(data)):
        if r == i:
            continue
        f = data[r][j]
        if f:
            row = data[r]
            for u in range(len(row)):
                if u != j and srow[u]:
                    row[u] = sub(row[u], mul(f, srow[u]))
            row[j] = neg(mul(f, ainv))
    data[i] = srow
    rows[i], cols[j] = cols[j], rows[i]


class ReprMatroid:
    __slots__ = (
        "rep",
        "ground",
        "_rowset",
        "_colset",
        "_rank_cache",
        "_col_vec",
        "_col_bits",
        "_bases_cache",
    )

    def __init__(self, rep: LabeledMatrix):
        self.rep = rep
        self._rowset = frozenset(rep.rows)
        self._colset = frozenset(rep.cols)
        self.ground = self._rowset | self._colset
        self._rank_cache: dict[frozenset[str], int] = {}
        self._col_vec = {c: rep.column_encs(c) for c in rep.cols}
        if rep.field.order == 2:
            self._col_bits = {
                c: sum(1 << i for i, e in enumerate(vec) if e)
                for c, vec in self._col_vec.items()
            }
        else:
            self._col_bits = None
        self._bases_cache: frozenset[frozenset[str]] | None = None

    @property
    def field(self) -> FieldSpec:
        return self.rep.field

    @property
    def basis(self) -> frozenset[str]:
        """The displayed basis (the row-label set)."""
        return self._rowset

    def __repr__(self) -> str:
        return (
            f"ReprMatroid(rows={sorted(self._rowset)}, "
            f"cols={sorted(self._colset)}, field={self.field!r})"
        )

    # -- rank ----------------------------------------------------------------

    def rank(self, X: Iterable[str] | None = None) -> int:
        if X is None:
            return len(self.rep.rows)
        Xf = X if isinstance(X, frozenset) else frozenset(X)
        cached = self._rank_cache.get(Xf)
        if cached is not None:
            return cached
        unknown = Xf - self.ground
        if unknown:
            raise UnknownLabel(f"labels not in ground set: {sorted(unknown)}")
        R = Xf & self._rowset
        T = sorted(Xf & self._colset)
        # unit columns of R pivot immediately; what remains is the block
        # of A on the untouched rows against the columns of T
        if self._col_bits is not None:
            mask = 0
            rows = self.rep.rows
            for i in range(len(rows)):
                if rows[i] not in R:
                    mask |= 1 << i
            r = len(R) + rank_gf2(self._col_bits[v] & mask for v in T)
        else:
            rows = self.rep.rows
            active = [i for i in range(len(rows)) if rows[i] not in R]
            if active and T:
                from .matrices import _rank_generic

                mat = [[self._col_vec[v][i] for v in T] for i in active]
                r = len(R) + _rank_generic(self.field, mat)
            else:
                r = len(R)
        self._rank_cache[Xf] = r
        return r

    # -- minors ----------------------------------------------------------------

    def minor(
        self,
        contract: Iterable[str] = (),
        delete: Iterable[str] = (),
    ) -> "ReprMatroid":
        spec = MinorSpec(frozenset(contract), frozenset(delete))
        spec.validate(self)
        rows = list(self.rep.rows)
        cols = list(self.rep.cols)
        data = [list(r) for r in self.rep._data]
        field = self.field
        for e in sorted(spec.contract):
            self._contract_one(field, rows, cols, data, e)
        for e in sorted(spec.delete):
            self._delete_one(field, rows, cols, data, e)
        return ReprMatroid(LabeledMatrix(field, rows, cols, data))

    @staticmethod
    def _contract_one(field, rows, cols, data, e) -> None:
        if e in rows:
            i = rows.index(e)
            del rows[i]
            del data[i]
            return
        j = cols.index(e)
        pick = -1
        best = None
        for i in range(len(rows)):
            if data[i][j] and (best is None or rows[i] < best):
                pick, best = i, rows[i]
        if pick < 0:
            # zero column: contracting a loop is the same as deleting it
            del cols[j]
            for row in data:
                del row[j]
            return
        _pivot_inplace(field, rows, cols, data, pick, j)
        del rows[pick]
        del data[pick]

    @staticmethod
    def _delete_one(field, rows, cols, data, e) -> None:
        if e in cols:
            j = cols.index(e)
            del cols[j]
            for row in data:
                del row[j]
            return
        i = rows.index(e)
        pick = -1
        best = None
        for j in range(len(cols)):
            if data[i][j] and (best is None or cols[j] < best):
                pick, best = j, cols[j]
        if pick < 0:
            # zero row: e is a coloop, dropping the row deletes it
            del rows[i]
            del data[i]
            return
        _pivot_inplace(field, rows, cols, data, i, pick)
        del cols[pick]
        for row in data:
            del row[pick]

    def minor_of(self, spec: MinorSpec) -> "ReprMatroid":
        return self.minor(spec.contract, spec.delete)

    def rebase(self, B: Iterable[str]) -> "ReprMatroid":
        """The same matroid re-displayed with basis B on the row side."""
        Bf = frozenset(B)
        unknown = Bf - self.ground
        if unknown:
            raise UnknownLabel(f"labels not in ground set: {sorted(unknown)}")
        if len(Bf) != self.rank() or self.rank(Bf) != len(Bf):
            raise InvalidArgs(f"{sorted(Bf)} is not a basis")
        rows = list(self.rep.rows)
        cols = list(self.rep.cols)
        data = [list(r) for r in self.rep._data]
        field = self.field
        for v in sorted(Bf - self._rowset):
            j = cols.index(v)
            pick = -1
            best = None
            for i in range(len(rows)):
                if rows[i] not in Bf and data[i][j] and (best is None or rows[i] < best):
                    pick, best = i, rows[i]
            # B independent guarantees a pivot row outside B exists
            _pivot_inplace(field, rows, cols, data, pick, j)
        return ReprMatroid(LabeledMatrix(field, rows, cols, data))

    # -- duality -----------------------------------------------------------------

    def dual(self) -> "ReprMatroid":
        rep = self.rep
        neg = rep.field.neg_enc
        m, n = rep.shape
        data = [[neg(rep._data[i][j]) for i in range(m)] for j in range(n)]
        return ReprMatroid(LabeledMatrix(rep.field, rep.cols, rep.rows, data))

    # -- matroid predicates ---------------------------------------------------------

    def equals(self, other: "ReprMatroid", *, max_ground: int = EQUALS_CAP_DEFAULT) -> bool:
        """Rank functions agree on every subset of a shared ground set."""
        if self.ground != other.ground:
            return False
        if len(self.ground) > max_ground:
            raise CapExceeded(
                f"|E| = {len(self.ground)} exceeds equals cap {max_ground}; "
                "pass max_ground explicitly to override"
            )
        for X in subsets_by_size(self.ground):
            if self.rank(X) != other.rank(X):
                return False
        return True

    def bases(self) -> frozenset[frozenset[str]]:
        if self._bases_cache is None:
            r = self.rank()
            self._bases_cache = frozenset(
                frozenset(c)
                for c in combinations(sorted(self.ground), r)
                if self.rank(frozenset(c)) == r
            )
        return self._bases_cache

    def closure(self, X: Iterable[str]) -> frozenset[str]:
        Xf = frozenset(X)
        r = self.rank(Xf)
        return Xf | frozenset(
            e for e in self.ground - Xf if self.rank(Xf | {e}) == r
        )

    def is_circuit(self, X: Iterable[str]) -> bool:
        Xf = frozenset(X)
        if not Xf:
            return False
        k = len(Xf)
        if self.rank(Xf) != k - 1:
            return False
        return all(self.rank(Xf - {e}) == k - 1 for e in Xf)

    def is_circuit_hyperplane(self, H: Iterable[str]) -> bool:
        Hf = frozenset(H)
        return (
            self.is_circuit(Hf)
            and self.rank(Hf) == self.rank() - 1
            and self.closure(Hf) == Hf
        )


def is_relaxation(M1: ReprMatroid, M2: ReprMatroid, H: Iterable[str]) -> bool:
    """True iff M2's bases are exactly M1's bases plus the set H, and H
    is a circuit-hyperplane of M1."""
    if M1.ground != M2.ground:
        raise GroundSetMismatch(
            f"{sorted(M1.ground)} vs {sorted(M2.ground)}"
        )
    Hf = frozenset(H)
    unknown = Hf - M1.ground
    if unknown:
        raise UnknownLabel(f"labels not in ground set: {sorted(unknown)}")
    if not M1.is_circuit_hyperplane(Hf):
        return False
    return M2.bases() == (M1.bases() | {Hf})


def isolated(
    basis: Iterable[str],
    ground: Iterable[str],
    field: FieldSpec | None = None,
) -> ReprMatroid:
    """The matroid on `ground` whose elements are all loops except the
    coloops in `basis`; its unique basis is `basis`.  Rank data does not
    depend on the representing field, so GF(2) is the default."""
    B = frozenset(str(x) for x in basis)
    E = frozenset(str(x) for x in ground)
    if not B <= E:
        raise GroundSetMismatch(f"basis {sorted(B)} not inside ground {sorted(E)}")
    if field is None:
        field = make_prime_field(2)
    rows = sorted(B)
    cols = sorted(E - B)
    zero = [[0] * len(cols) for _ in rows]
    return ReprMatroid(LabeledMatrix(field, rows, cols, zero))


def isolated_rn(r: int, n: int, field: FieldSpec | None = None) -> ReprMatroid:
    """Numeric shorthand: coloops 1..r, loops r+1..n."""
    if not 0 <= r <= n:
        raise InvalidArgs(f"need 0 <= r <= n, got r={r}, n={n}")
    labels = [str(i) for i in range(1, n + 1)]
    return isolated(labels[:r], labels, field)
