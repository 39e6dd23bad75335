"""Fragility certificates for matroids and matrices.

A matroid M is fragile with respect to a fixed minor N on a fixed label
set when exactly one partition (C, D) of E(M) - E(N) realises N as
M contract C delete D.  `fragile_partitions` finds every realising
partition by brute force, so the certificate is the whole search space,
not a heuristic.

The matrix-side notion: a labeled matrix A is X-fragile when the block
A[X] vanishes and adjoining X to any nonempty disjoint Y strictly
increases rank.  The two notions meet in `reductions`: zeroing the
displayed block of a fragile pair produces an X-fragile matrix, and
X-fragile matrices display isolated-minor fragility.

Enumeration order is fixed (size, then lexicographic), so the witness a
failed check returns is minimal in that order.  Both searches refuse
instances above the documented caps; pass a larger cap explicitly to
override.
"""

from __future__ import annotations

from typing import Iterable

from .errors import CapExceeded, GroundSetMismatch, UnknownLabel
from .matrices import LabeledMatrix, submatrix_rank
from .matroids import MinorSpec, ReprMatroid
from .subsets import partitions_of, subsets_by_size

PARTITION_CAP_DEFAULT = 12
SUBSET_CAP_DEFAULT = 12


def fragile_partitions(
    M: ReprMatroid,
    N: ReprMatroid,
    *,
    cap: int = PARTITION_CAP_DEFAULT,
) -> frozenset[MinorSpec]:
    """Every partition (C, D) of E(M) - E(N) with M/C\\D equal to N as a
    labeled matroid (same labels, same rank function)."""
    if not N.ground <= M.ground:
        raise GroundSetMismatch(
            f"minor ground {sorted(N.ground)} not inside {sorted(M.ground)}"
        )
    rest = M.ground - N.ground
    if len(rest) > cap:
        raise CapExceeded(
            f"|E(M)-E(N)| = {len(rest)} exceeds partition cap {cap}"
        )
    # M/C\D has ground set E(N) for every partition, and its rank of X
    # is rank_M(X | C) - rank_M(C), so the comparison runs on M's cached
    # rank function instead of materialising 2^|rest| pivoted minors
    rN = [(X, N.rank(X)) for X in subsets_by_size(N.ground, min_size=1)]
    found = []
    for C, D in partitions_of(rest):
        rc = M.rank(C)
        if all(M.rank(X | C) - rc == rx for X, rx in rN):
            found.append(MinorSpec(C, D))
    return frozenset(found)


def is_N_fragile(
    M: ReprMatroid,
    N: ReprMatroid,
    *,
    cap: int = PARTITION_CAP_DEFAULT,
) -> bool:
    return len(fragile_partitions(M, N, cap=cap)) == 1


def x_fragile_failure(
    A: LabeledMatrix,
    X: Iterable[str],
    *,
    cap: int = SUBSET_CAP_DEFAULT,
):
    """First reason A is not X-fragile, or None if it is.

    Returns ("block_nonzero", (row, col)) for the first nonzero entry of
    the X block in label order, or ("rank_not_increased", Y) for the
    minimal nonempty Y whose rank does not strictly grow when X joins
    it.
    """
    Xf = frozenset(X)
    unknown = Xf - A.labels()
    if unknown:
        raise UnknownLabel(f"labels not in matrix: {sorted(unknown)}")
    xr = sorted(Xf & frozenset(A.rows))
    xc = sorted(Xf & frozenset(A.cols))
    for r in xr:
        for c in xc:
            if A.enc(r, c):
                return ("block_nonzero", (r, c))
    rest = A.labels() - Xf
    if len(rest) > cap:
        raise CapExceeded(f"|labels - X| = {len(rest)} exceeds subset cap {cap}")
    for Y in subsets_by_size(rest, min_size=1):
        if submatrix_rank(A, Xf | Y) <= submatrix_rank(A, Y):
            return ("rank_not_increased", Y)
    return None


def is_X_fragile_matrix(
    A: LabeledMatrix,
    X: Iterable[str],
    *,
    cap: int = SUBSET_CAP_DEFAULT,
) -> bool:
    """A[X] vanishes and every nonempty disjoint Y gains rank from X."""
    return x_fragile_failure(A, X, cap=cap) is None


def display_basis(M: ReprMatroid, N: ReprMatroid) -> frozenset[str] | None:
    """Lexicographically least basis B of M displaying N, i.e. with
    M contract (B - E(N)) delete (E(M) - B - E(N)) equal to N.  None
    when N is not a minor of M on its labels."""
    if not N.ground <= M.ground:
        raise GroundSetMismatch(
            f"minor ground {sorted(N.ground)} not inside {sorted(M.ground)}"
        )
    r = M.rank()
    from itertools import combinations

    for combo in combinations(sorted(M.ground), r):
        B = frozenset(combo)
        if M.rank(B) != r:
            continue
        C = B - N.ground
        D = M.ground - B - N.ground
        if M.minor(C, D).equals(N):
            return B
    return None
