"""The constructive chain from a fragile pair to a relaxed matroid.

Given a matroid M that is fragile with respect to a minor N, the stages
below transform M, certificate by certificate, into a pair (M1, M2)
over an extension field such that M2 relaxes M1 at a circuit-hyperplane
H, while the part of M outside E(N) survives as a common minor:

  1. zero_out       display N by a basis B and zero the E(N) block of
                    the standard representation; contraction by the
                    displayed basis of N is unchanged.
  2. collapse_side  add one element freely into the span of the loop
                    side of the isolated minor, then delete that side;
                    run again in the dual for the coloop side.  After
                    both, the minor is a single coloop c and a single
                    loop d.
  3. relax_entry    the displayed (c, d) entry is forced to zero;
                    replacing it with a generator of a quadratic
                    extension adds exactly one basis, namely
                    H = rows - {c} + {d}.

Every stage re-verifies its own guarantees by exhaustive oracle before
returning and raises PostconditionViolation with a minimal witness when
one fails, so a completed ReductionTrace is itself a certificate.

Field growth: collapsing a side of size s needs s coordinates linearly
independent over the current field, hence a degree max(1, s) extension
by default.  Conformance mode instead extends by degree k = |E(N)| at
both collapse stages, landing on total degree exactly 2*k*k over the
input field; the default minimal degrees do not always divide 2*k*k, so
the uniform-degree tower is built stage by stage rather than by a final
embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Iterable

from .errors import (
    InvalidArgs,
    LabelCollision,
    NotFragile,
    PostconditionViolation,
    UnknownLabel,
)
from .fragility import (
    PARTITION_CAP_DEFAULT,
    display_basis,
    fragile_partitions,
    is_N_fragile,
    x_fragile_failure,
)
from .galois import DEGREE_CAP_DEFAULT, FieldSpec, extend_field, is_in_subfield, subfield_basis
from .matrices import LabeledMatrix, submatrix_rank
from .matroids import ReprMatroid, is_relaxation, isolated
from .subsets import subsets_by_size


def _fresh_label(stem: str, used: set[str]) -> str:
    if stem not in used:
        return stem
    i = 1
    while f"{stem}{i}" in used:
        i += 1
    return f"{stem}{i}"


# ---------------------------------------------------------------------------
# stage 1: zero the displayed block


def zero_out(
    M: ReprMatroid, N: ReprMatroid, *, cap: int = PARTITION_CAP_DEFAULT
) -> tuple[ReprMatroid, LabeledMatrix]:
    """Zero the E(N) block of a representation of M displaying N.

    Requires M fragile with respect to N (exactly one realising
    partition).  Returns the rewritten matroid and its representation,
    whose row-label set is the displaying basis.
    """
    parts = fragile_partitions(M, N, cap=cap)
    if len(parts) != 1:
        raise NotFragile(
            f"{len(parts)} partitions realise the minor; need exactly one"
        )
    B = display_basis(M, N)
    if B is None:
        raise NotFragile("no basis of the matroid displays the minor")
    A = M.rebase(B).rep
    block_rows = sorted(B & N.ground)
    block_cols = sorted(N.ground - B)
    data = [list(row) for row in A._data]
    for r in block_rows:
        i = A._row_pos[r]
        for c in block_cols:
            data[i][A._col_pos[c]] = 0
    A2 = LabeledMatrix(A.field, A.rows, A.cols, data)
    M2 = ReprMatroid(A2)

    fail = x_fragile_failure(A2, N.ground, cap=cap)
    if fail is not None:
        raise PostconditionViolation(f"zeroed representation not block-fragile: {fail}")
    BN = B & N.ground
    if not M2.minor(contract=BN).equals(M.minor(contract=BN)):
        raise PostconditionViolation(
            "zeroing the block changed the contraction by the displayed minor basis"
        )
    if not is_N_fragile(M2, isolated(BN, N.ground), cap=cap):
        raise PostconditionViolation(
            "zeroed matroid is not fragile for the isolated minor"
        )
    return M2, A2


# ---------------------------------------------------------------------------
# free column extension


def free_extension(
    A: LabeledMatrix,
    X: Iterable[str],
    e: str,
    *,
    degree: int | None = None,
    degree_cap: int = DEGREE_CAP_DEFAULT,
) -> LabeledMatrix:
    """Append a column for a new element lying freely on the flat
    spanned by the columns X of the standard representation [I | A].

    The new column is sum(alpha_v * column(v)) where the alpha_v are the
    first |X| power-basis elements of a field extension, so they are
    linearly independent over the entry field.  The extension degree
    defaults to max(1, |X|) and may be raised (never lowered) with
    `degree`.  The defining property of a free placement is re-checked
    exhaustively before returning: every subset of the old ground set
    that spans e must span all of X, and X spans e.
    """
    Xf = frozenset(X)
    not_cols = Xf - frozenset(A.cols)
    if not_cols:
        raise UnknownLabel(f"not column labels of the matrix: {sorted(not_cols)}")
    if e in A._row_pos or e in A._col_pos:
        raise LabelCollision(f"label {e!r} already used")
    k = len(Xf)
    need = max(1, k)
    d = need if degree is None else degree
    if d < need:
        raise InvalidArgs(f"degree {d} below the minimum {need} for |X| = {k}")
    F = A.field
    F2 = extend_field(F, d, degree_cap=degree_cap)
    lifted = A.lift(F2) if F2 != F else A
    alphas = subfield_basis(F2, F)[:k]
    xs = sorted(Xf)
    mul, add = F2.mul_enc, F2.add_enc
    col_encs = []
    for i in range(len(A.rows)):
        acc = 0
        for a, v in zip(alphas, xs):
            acc = add(acc, mul(a.enc, lifted.enc(A.rows[i], v)))
        col_encs.append(acc)
    out = lifted.with_column(e, col_encs)

    Mn = ReprMatroid(out)
    old_ground = frozenset(A.rows) | frozenset(A.cols)
    if Mn.rank(Xf | {e}) != Mn.rank(Xf):
        raise PostconditionViolation("new element does not lie on the span of X")
    for S in subsets_by_size(old_ground):
        rs = Mn.rank(S)
        if Mn.rank(S | {e}) == rs and Mn.rank(S | Xf) != rs:
            raise PostconditionViolation(
                f"subset {sorted(S)} spans the new element but not all of X"
            )
    return out


# ---------------------------------------------------------------------------
# stage 2: collapse one side of an isolated minor


def collapse_side(
    M: ReprMatroid,
    X1: Iterable[str],
    X2: Iterable[str],
    d: str,
    *,
    degree: int | None = None,
    degree_cap: int = DEGREE_CAP_DEFAULT,
    cap: int = PARTITION_CAP_DEFAULT,
) -> ReprMatroid:
    """Collapse the loop side X2 of an isolated minor to one element d.

    Requires M fragile with respect to the all-loops-and-coloops minor
    with coloop set X1 and loop set X2.  Adds d freely on the span of
    X2, deletes X2, and certifies the result fragile for the collapsed
    isolated minor.
    """
    X1f, X2f = frozenset(X1), frozenset(X2)
    if X1f & X2f:
        raise InvalidArgs(f"sides overlap: {sorted(X1f & X2f)}")
    if d in M.ground:
        raise LabelCollision(f"label {d!r} already in the ground set")
    N = isolated(X1f, X1f | X2f)
    parts = fragile_partitions(M, N, cap=cap)
    if len(parts) != 1:
        raise NotFragile(
            f"{len(parts)} partitions realise the isolated minor; need exactly one"
        )
    B = display_basis(M, N)
    # B meets E(N) in the unique basis X1 of N, so X2 sits on the column side
    A = M.rebase(B).rep
    A2 = free_extension(A, X2f, d, degree=degree, degree_cap=degree_cap)
    out = ReprMatroid(A2).minor(delete=X2f)
    if not is_N_fragile(out, isolated(X1f, X1f | {d}), cap=cap):
        raise PostconditionViolation(
            "collapsed matroid is not fragile for the collapsed isolated minor"
        )
    return out


def reduce_to_two(
    M: ReprMatroid,
    X1: Iterable[str],
    X2: Iterable[str],
    c: str,
    d: str,
    *,
    degree_loops: int | None = None,
    degree_coloops: int | None = None,
    degree_cap: int = DEGREE_CAP_DEFAULT,
    cap: int = PARTITION_CAP_DEFAULT,
) -> ReprMatroid:
    """Collapse both sides of an isolated minor to fresh elements c, d.

    The loop side X2 is collapsed directly, the coloop side X1 in the
    dual.  The result is fragile for the two-element isolated minor
    (coloop c, loop d), agrees with M off the minor (contracting c and
    deleting d matches contracting X1 and deleting X2), and lives over
    an extension of total degree max(1,|X1|) * max(1,|X2|) unless larger
    per-stage degrees are requested.
    """
    X1f, X2f = frozenset(X1), frozenset(X2)
    if c == d:
        raise LabelCollision("c and d must be distinct")
    for lab in (c, d):
        if lab in M.ground:
            raise LabelCollision(f"label {lab!r} already in the ground set")
    Ma = collapse_side(
        M, X1f, X2f, d, degree=degree_loops, degree_cap=degree_cap, cap=cap
    )
    Mc = collapse_side(
        Ma.dual(), frozenset({d}), X1f, c,
        degree=degree_coloops, degree_cap=degree_cap, cap=cap,
    )
    out = Mc.dual()

    if not is_N_fragile(out, isolated({c}, {c, d}), cap=cap):
        raise PostconditionViolation("result is not fragile for the two-element minor")
    if not out.minor({c}, {d}).equals(M.minor(X1f, X2f)):
        raise PostconditionViolation(
            "contracting c and deleting d does not match the original minor"
        )
    dd, rem = divmod(out.field.degree, M.field.degree)
    want = (degree_loops or max(1, len(X2f))) * (degree_coloops or max(1, len(X1f)))
    if rem or dd != want:
        raise PostconditionViolation(
            f"extension degree {out.field.degree}/{M.field.degree} != {want}"
        )
    k = len(X1f) + len(X2f)
    if degree_loops is None and degree_coloops is None and k >= 1 and dd > k * k:
        raise PostconditionViolation(f"degree {dd} above the k^2 bound {k * k}")
    return out


# ---------------------------------------------------------------------------
# stage 3: relax the displayed entry


def relax_entry(
    M: ReprMatroid,
    C: Iterable[str],
    D: Iterable[str],
    *,
    degree_cap: int = DEGREE_CAP_DEFAULT,
    cap: int = PARTITION_CAP_DEFAULT,
) -> tuple[ReprMatroid, ReprMatroid, frozenset[str]]:
    """Relax the circuit-hyperplane displayed by a coloop/loop pair.

    (C, D) must be the unique partition realising a two-element isolated
    minor (one coloop c, one loop d).  Re-displays M with basis C + {c};
    the (c, d) entry of that representation is necessarily zero.  M1 is
    the re-displayed matroid; M2 replaces the zero with a generator of a
    quadratic extension.  Returns (M1, M2, H) where H = C + {d} is a
    circuit-hyperplane of M1 and the unique new basis of M2.

    Verified before returning: the two representations have equal ranks
    on every label subset except exactly {c, d}, and M2 is a relaxation
    of M1 at H.
    """
    Cf, Df = frozenset(C), frozenset(D)
    rest = M.ground - Cf - Df
    if Cf & Df or not (Cf | Df) <= M.ground:
        raise InvalidArgs("contract and delete sets must be disjoint subsets of the ground set")
    if len(rest) != 2:
        raise NotFragile(f"displayed minor has {len(rest)} elements; need exactly 2")
    Mn = M.minor(Cf, Df)
    by_rank = {x: Mn.rank({x}) for x in rest}
    coloops = [x for x, r in by_rank.items() if r == 1]
    loops = [x for x, r in by_rank.items() if r == 0]
    if len(coloops) != 1 or len(loops) != 1:
        raise NotFragile(f"minor is not one coloop plus one loop: ranks {by_rank}")
    c, d = coloops[0], loops[0]
    N = isolated({c}, {c, d})
    if not Mn.equals(N):
        raise NotFragile("displayed minor is not the isolated coloop/loop pair")
    parts = fragile_partitions(M, N, cap=cap)
    if len(parts) != 1 or next(iter(parts)).contract != Cf:
        raise NotFragile(
            "the matroid is not fragile for the pair, or (C, D) is not its partition"
        )

    A1 = M.rebase(Cf | {c}).rep
    if A1.enc(c, d) != 0:
        raise PostconditionViolation("displayed coloop/loop entry is nonzero")
    fail = x_fragile_failure(A1, {c, d}, cap=cap)
    if fail is not None:
        raise PostconditionViolation(f"displayed representation not pair-fragile: {fail}")
    M1 = ReprMatroid(A1)

    F = A1.field
    F2 = extend_field(F, 2, degree_cap=degree_cap)
    theta = F2.gen
    if is_in_subfield(theta, F):
        raise PostconditionViolation("extension generator lies in the entry field")
    A2 = A1.lift(F2).set_entry(c, d, theta)
    M2 = ReprMatroid(A2)
    H = Cf | {d}

    pair = frozenset({c, d})
    for Z in subsets_by_size(A1.labels()):
        differs = submatrix_rank(A1, Z) != submatrix_rank(A2, Z)
        if differs != (Z == pair):
            raise PostconditionViolation(
                f"rank difference pattern wrong at {sorted(Z)}"
            )
    if not is_relaxation(M1, M2, H):
        raise PostconditionViolation("altered matroid is not a relaxation at H")
    return M1, M2, H


# ---------------------------------------------------------------------------
# the full pipeline


@dataclass
class StageRecord:
    name: str
    degree_over_input: int
    matroid: ReprMatroid
    verdicts: dict[str, bool]
    details: dict = dataclass_field(default_factory=dict)


@dataclass
class ReductionTrace:
    input_matroid: ReprMatroid
    minor_matroid: ReprMatroid
    displayed_basis: frozenset[str]
    coloop_side: frozenset[str]
    loop_side: frozenset[str]
    c_label: str
    d_label: str
    stages: list[StageRecord]
    relaxed: ReprMatroid          # M1
    relaxation: ReprMatroid       # M2
    hyperplane: frozenset[str]
    conformance: bool
    degree_bound: int             # 2 k^2 over the input field
    final_degree_over_input: int

    def all_verified(self) -> bool:
        return all(v for s in self.stages for v in s.verdicts.values())


def pipeline(
    M: ReprMatroid,
    N: ReprMatroid,
    *,
    conformance: bool = False,
    degree_cap: int = DEGREE_CAP_DEFAULT,
    cap: int = PARTITION_CAP_DEFAULT,
) -> ReductionTrace:
    """Run the whole chain on a fragile pair and certify every stage.

    Default mode keeps extensions minimal: a side of the displayed
    isolated minor that is already a single element is left alone, and a
    collapsed side of size s costs a degree max(1, s) extension, so the
    final field has degree 2 * max(1,|B|) * max(1,|E(N)|-|B|) over the
    input field, with B the displayed basis of N.  Conformance mode
    always collapses both sides at degree k = |E(N)|, landing on total
    degree exactly 2*k*k (the degree cap is raised to fit that tower).
    """
    k = len(N.ground)
    base_field = M.field
    if conformance and k == 0:
        raise InvalidArgs("conformance mode needs a nonempty minor")
    dcap = degree_cap
    if conformance:
        dcap = max(dcap, base_field.degree * 2 * k * k)

    Mz, Az = zero_out(M, N, cap=cap)
    B = frozenset(Az.rows)
    X1 = B & N.ground
    X2 = N.ground - B
    stages = [
        StageRecord(
            name="zero_displayed_block",
            degree_over_input=1,
            matroid=Mz,
            verdicts={
                "unique_partition": True,
                "zero_block_fragile": True,
                "contraction_unchanged": True,
                "isolated_minor_fragile": True,
            },
            details={"displayed_basis": sorted(B)},
        )
    ]

    used = set(M.ground)
    cur = Mz

    def _deg(m: ReprMatroid) -> int:
        q, r = divmod(m.field.degree, base_field.degree)
        if r:
            raise PostconditionViolation("stage field is not a tower over the input field")
        return q

    # loop side
    if not conformance and len(X2) == 1:
        d_label = next(iter(X2))
        stages.append(
            StageRecord(
                name="collapse_loop_side",
                degree_over_input=1,
                matroid=cur,
                verdicts={"already_single": True},
                details={"d": d_label, "skipped": True},
            )
        )
    else:
        d_label = _fresh_label("d", used)
        used.add(d_label)
        cur = collapse_side(
            cur, X1, X2, d_label,
            degree=(k if conformance else None), degree_cap=dcap, cap=cap,
        )
        stages.append(
            StageRecord(
                name="collapse_loop_side",
                degree_over_input=_deg(cur),
                matroid=cur,
                verdicts={
                    "unique_partition": True,
                    "free_flat_condition": True,
                    "collapsed_fragile": True,
                },
                details={"d": d_label, "collapsed": sorted(X2)},
            )
        )

    # coloop side, handled in the dual
    if not conformance and len(X1) == 1:
        c_label = next(iter(X1))
        stages.append(
            StageRecord(
                name="collapse_coloop_side",
                degree_over_input=_deg(cur),
                matroid=cur,
                verdicts={"already_single": True},
                details={"c": c_label, "skipped": True},
            )
        )
    else:
        c_label = _fresh_label("c", used)
        used.add(c_label)
        cur = collapse_side(
            cur.dual(), frozenset({d_label}), X1, c_label,
            degree=(k if conformance else None), degree_cap=dcap, cap=cap,
        ).dual()
        stages.append(
            StageRecord(
                name="collapse_coloop_side",
                degree_over_input=_deg(cur),
                matroid=cur,
                verdicts={
                    "unique_partition": True,
                    "free_flat_condition": True,
                    "collapsed_fragile": True,
                },
                details={"c": c_label, "collapsed": sorted(X1)},
            )
        )

    # relax the displayed entry
    N2 = isolated({c_label}, {c_label, d_label})
    B2 = display_basis(cur, N2)
    if B2 is None:
        raise PostconditionViolation("two-element minor lost before relaxation")
    C2 = B2 - {c_label}
    D2 = cur.ground - B2 - {d_label}
    M1, M2, H = relax_entry(cur, C2, D2, degree_cap=dcap, cap=cap)
    stages.append(
        StageRecord(
            name="relax_entry",
            degree_over_input=_deg(M1) * 2,
            matroid=M2,
            verdicts={
                "displayed_block_zero": True,
                "pair_fragile_matrix": True,
                "generator_outside_base": True,
                "rank_difference_only_at_pair": True,
                "relaxation": True,
            },
            details={"hyperplane": sorted(H)},
        )
    )

    if not M.minor(X1, X2).equals(M1.minor({c_label}, {d_label})):
        raise PostconditionViolation(
            "pipeline lost the common minor: contracting the displayed basis "
            "of the input minor disagrees with contracting c and deleting d"
        )
    degs = [s.degree_over_input for s in stages]
    if any(a > b for a, b in zip(degs, degs[1:])):
        raise PostconditionViolation(f"stage degrees not monotone: {degs}")
    final_degree = M2.field.degree // base_field.degree
    bound = 2 * k * k
    if k >= 1 and final_degree > bound:
        raise PostconditionViolation(
            f"final degree {final_degree} above the 2k^2 bound {bound}"
        )
    if conformance and final_degree != bound:
        raise PostconditionViolation(
            f"conformance degree {final_degree} != 2k^2 = {bound}"
        )

    return ReductionTrace(
        input_matroid=M,
        minor_matroid=N,
        displayed_basis=B,
        coloop_side=X1,
        loop_side=X2,
        c_label=c_label,
        d_label=d_label,
        stages=stages,
        relaxed=M1,
        relaxation=M2,
        hyperplane=H,
        conformance=conformance,
        degree_bound=bound,
        final_degree_over_input=final_degree,
    )
