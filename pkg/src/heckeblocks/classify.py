"""Representation-type classification of blocks.

The decision tables live in :func:`classify_canonical`; everything else
reduces its input to a canonical label (or a pair of level-one labels in
the separated-parameter case) and dispatches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cartan import AffineRank, RootVec, WeightVec, dynkin_rotate
from .fock import Bipartition, FockContext, content
from .gdim import (
    QuiverBound,
    QuiverShapeError,
    dim_matrix,
    nonzero_idempotents,
    quiver_bounds,
)
from .orbits import (
    LAMBDA,
    MU,
    CanonicalRep,
    NotAWeightError,
    canonical_rep,
    is_weight,
)

SIMPLE = "simple"
FINITE = "finite"
TAME = "tame"
WILD = "wild"

#: blocks of height above this skip the quiver computation in reports
QUIVER_HEIGHT_CAP = 8


class UnsupportedConfigError(ValueError):
    """The ground-field configuration is outside the supported range."""


@dataclass(frozen=True)
class ClassifierConfig:
    """Ground-field assumptions.

    char2/char_odd record what is known about the characteristic;
    lambda_is_sign records whether the deformation scalar attached to
    the double-charge-zero tame candidate equals the critical sign.
    """

    char2: bool = False
    char_odd: bool = False
    lambda_is_sign: bool = True

    def __post_init__(self) -> None:
        if self.char2 and self.char_odd:
            raise ValueError("char2 and char_odd cannot both hold")

    def to_json(self) -> dict:
        return {
            "char2": self.char2,
            "char_odd": self.char_odd,
            "lambda_is_sign": self.lambda_is_sign,
        }


@dataclass(frozen=True)
class BrauerData:
    """Shape of the basic algebra when it is special biserial."""

    kind: str  # "line" or "graph"
    edges: int
    exceptional: tuple[tuple[int, int], ...] = ()
    description: str = ""

    def __post_init__(self) -> None:
        if self.kind not in ("line", "graph"):
            raise ValueError(f"kind must be 'line' or 'graph', got {self.kind}")
        if self.edges < 0:
            raise ValueError("edges must be nonnegative")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "edges": self.edges,
            "exceptional": [list(pair) for pair in self.exceptional],
            "description": self.description,
        }


@dataclass(frozen=True)
class RepType:
    """A representation-type verdict, with structure when one is known."""

    tag: str
    structure: Optional[BrauerData] = None

    def __post_init__(self) -> None:
        if self.tag not in (SIMPLE, FINITE, TAME, WILD):
            raise ValueError(f"unknown tag {self.tag}")
        if self.structure is not None and self.tag in (SIMPLE, WILD):
            raise ValueError("structure data only applies to finite/tame blocks")

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "brauer": None if self.structure is None else self.structure.to_json(),
        }

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class BlockReport:
    """Everything the classifier can say about one block."""

    input: dict
    canonical: Optional[CanonicalRep]
    rep_type: RepType
    quiver: Optional[QuiverBound] = None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "input": dict(self.input),
            "canonical": None if self.canonical is None else self.canonical.to_json(),
            "rep_type": self.rep_type.tag,
            "brauer": (
                None
                if self.rep_type.structure is None
                else self.rep_type.structure.to_json()
            ),
            "quiver": None if self.quiver is None else self.quiver.to_json(),
            "notes": list(self.notes),
        }


def normalize(ctx: FockContext, rep: CanonicalRep) -> tuple[FockContext, CanonicalRep]:
    """Rewrite a mu-family label as the lambda-family label of the rotated
    context; lambda-family labels pass through unchanged."""
    if rep.family == LAMBDA:
        return ctx, rep
    if ctx.level != 2:
        raise ValueError("mu labels only arise for level-two contexts")
    s2 = ctx.rank.ell - rep.s + 1
    ctx2 = FockContext(ctx.rank, s2, level=2)
    return ctx2, CanonicalRep(LAMBDA, s2, rep.i, rep.k)


def brauer_of_finite(ctx: FockContext, rep: CanonicalRep) -> BrauerData:
    """Basic-algebra shape of a finite-type block: a straight line whose
    edge count depends only on the charges."""
    if rep.family != LAMBDA:
        raise ValueError("normalize the label before asking for structure")
    if ctx.level == 1:
        edges = ctx.rank.ell
    else:
        edges = ctx.s + 1
    return BrauerData(
        kind="line",
        edges=edges,
        description=f"straight line with {edges} edges and no exceptional vertex",
    )


def _tame_graph_level_two() -> BrauerData:
    return BrauerData(
        kind="graph",
        edges=2,
        exceptional=((1, 2), (3, 2)),
        description=(
            "path on vertices 1-2-3 with exceptional vertices 1 and 3 "
            "of multiplicity 2"
        ),
    )


def classify_canonical(
    ctx: FockContext, rep: CanonicalRep, cfg: ClassifierConfig
) -> RepType:
    """Decision table on a normalized (lambda-family) canonical label."""
    if rep.family != LAMBDA:
        raise ValueError("normalize the label before classifying")
    if ctx.level != 2:
        raise ValueError("use classify_typeA_levelone for level-one contexts")
    ell, s = ctx.rank.ell, ctx.s
    if rep.s != s:
        raise ValueError(f"label charge {rep.s} does not match context charge {s}")
    if not 0 <= rep.i <= (ell - s + 1) // 2:
        raise ValueError(f"i must lie in 0..{(ell - s + 1) // 2}, got {rep.i}")
    i, k = rep.i, rep.k
    if (i, k) == (0, 0):
        return RepType(SIMPLE)
    if (i, k) == (1, 0):
        return RepType(FINITE, brauer_of_finite(ctx, rep))
    if s >= 1:
        if (i, k) == (0, 1) and ell == 1:
            return RepType(TAME, _tame_graph_level_two())
        return RepType(WILD)
    # distinct-charge rules above; equal charges (s == 0) below
    if (i, k) == (0, 1):
        if ell == 1 or not cfg.lambda_is_sign:
            return RepType(TAME)
        return RepType(WILD)
    if (i, k) == (2, 0) and not cfg.char2:
        return RepType(TAME)
    return RepType(WILD)


def classify_typeA_levelone(ctx: FockContext, beta: RootVec) -> RepType:
    """Representation type of a level-one block, by null-root multiplicity."""
    if ctx.level != 1:
        raise ValueError("context must be level one")
    rep = canonical_rep(ctx, beta)
    k = rep.k
    ell = ctx.rank.ell
    if k == 0:
        return RepType(SIMPLE)
    if k == 1:
        return RepType(
            FINITE,
            BrauerData(
                kind="line",
                edges=ell,
                description=(
                    f"straight line with {ell} edges and no exceptional vertex"
                ),
            ),
        )
    if k == 2 and ell == 1:
        return RepType(TAME)
    return RepType(WILD)


def classify_tensor(t1: RepType, t2: RepType, ell: int) -> RepType:
    """Representation type of an outer tensor product of two blocks."""
    if t1.tag == SIMPLE:
        return t2
    if t2.tag == SIMPLE:
        return t1
    if WILD in (t1.tag, t2.tag):
        return RepType(WILD)
    if t1.tag == FINITE and t2.tag == FINITE:
        return RepType(TAME) if ell == 1 else RepType(WILD)
    # finite x tame, tame x finite, tame x tame all have too much growth
    return RepType(WILD)


def _attach_quiver(
    ctx: FockContext, beta: RootVec
) -> tuple[Optional[QuiverBound], list[str]]:
    notes: list[str] = []
    if beta.height > QUIVER_HEIGHT_CAP:
        notes.append(
            f"quiver bounds skipped: block height {beta.height} exceeds "
            f"cap {QUIVER_HEIGHT_CAP}"
        )
        return None, notes
    idems = nonzero_idempotents(ctx, beta)
    if not idems:
        notes.append("no nonzero idempotent classes; quiver bounds not applicable")
        return None, notes
    matrix = dim_matrix(ctx, beta, idems)
    try:
        return quiver_bounds(matrix), notes
    except QuiverShapeError as exc:
        notes.append(f"quiver bounds not applicable: {exc}")
        return None, notes


def classify_block(
    ctx: FockContext,
    beta: RootVec,
    cfg: Optional[ClassifierConfig] = None,
    with_quiver: bool = True,
) -> BlockReport:
    """Full report for the block of beta in the given context."""
    if cfg is None:
        cfg = ClassifierConfig()
    if beta.rank != ctx.rank:
        raise ValueError("rank mismatch between context and root vector")
    if not beta.in_positive_cone():
        raise NotAWeightError(f"{beta} is outside the positive cone; the block is zero")
    if not is_weight(ctx, beta):
        raise NotAWeightError(
            f"{beta} does not correspond to a module weight; the block is zero"
        )
    rep = canonical_rep(ctx, beta)
    notes: list[str] = []
    if ctx.level == 1:
        rep_type = classify_typeA_levelone(ctx, beta)
    else:
        ctx2, rep2 = normalize(ctx, rep)
        if rep.family == MU:
            notes.append(
                f"mu label rewritten as lambda label with charge {rep2.s}"
            )
        rep_type = classify_canonical(ctx2, rep2, cfg)
    quiver: Optional[QuiverBound] = None
    if with_quiver:
        quiver, qnotes = _attach_quiver(ctx, beta)
        notes.extend(qnotes)
    report = BlockReport(
        input={
            "ell": ctx.rank.ell,
            "s": ctx.s,
            "level": ctx.level,
            "beta": beta.to_json(),
        },
        canonical=rep,
        rep_type=rep_type,
        quiver=quiver,
        notes=tuple(notes),
    )
    return report


def classify_level_two(
    rank: AffineRank,
    charges: tuple[int, int],
    beta: RootVec,
    cfg: Optional[ClassifierConfig] = None,
    with_quiver: bool = True,
) -> BlockReport:
    """Classify for an arbitrary pair of charges by rotating the quiver so
    the smaller charge moves to vertex zero."""
    a, b = charges
    e = rank.e
    t = (-a) % e
    fund = [0] * e
    fund[a % e] += 1
    fund[b % e] += 1
    weight = WeightVec(rank, tuple(fund))
    _, beta2 = dynkin_rotate(t, weight, beta)
    s = (b - a) % e
    ctx = FockContext(rank, s, level=2)
    report = classify_block(ctx, beta2, cfg, with_quiver=with_quiver)
    notes = report.notes
    if t != 0:
        notes = notes + (f"quiver rotated by {t} to move a charge to vertex 0",)
    return BlockReport(
        input={
            "ell": rank.ell,
            "charges": [a % e, b % e],
            "level": 2,
            "beta": beta.to_json(),
        },
        canonical=report.canonical,
        rep_type=report.rep_type,
        quiver=report.quiver,
        notes=notes,
    )


def _partitions_of(total: int) -> list[tuple[int, ...]]:
    result: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            result.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(total, total, [])
    return result


def _level_one_block_contents(ctx: FockContext, n: int) -> list[RootVec]:
    seen: dict[tuple[int, ...], RootVec] = {}
    for parts in _partitions_of(n):
        bp = Bipartition(parts, ())
        vec = content(ctx, bp)
        seen.setdefault(vec.coeffs, vec)
    return [seen[key] for key in sorted(seen)]


def _level_two_block_contents(ctx: FockContext, n: int) -> list[RootVec]:
    seen: dict[tuple[int, ...], RootVec] = {}
    for m in range(n + 1):
        for first in _partitions_of(m):
            for second in _partitions_of(n - m):
                vec = content(ctx, Bipartition(first, second))
                seen.setdefault(vec.coeffs, vec)
    return [seen[key] for key in sorted(seen)]


def classify_heckeB(
    e: int,
    s: Optional[int],
    n: int,
    cfg: Optional[ClassifierConfig] = None,
    with_quiver: bool = False,
) -> list[BlockReport]:
    """Blocks of the rank-n type-B algebra at quantum characteristic e.

    s gives the exponent linking the two parameters; None means the
    parameters are separated and every block is an outer tensor product
    of two level-one blocks.
    """
    if cfg is None:
        cfg = ClassifierConfig()
    if e < 2:
        raise ValueError(f"quantum characteristic must be at least 2, got {e}")
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    rank = AffineRank(e - 1)
    if s is not None:
        ctx = FockContext(rank, s % e, level=2)
        reports = []
        for beta in _level_two_block_contents(ctx, n):
            reports.append(classify_block(ctx, beta, cfg, with_quiver=with_quiver))
        return reports
    # separated parameters: pairs of level-one blocks
    ctx1 = FockContext(rank, 0, level=1)
    reports = []
    combos = []
    for m in range(n + 1):
        for b1 in _level_one_block_contents(ctx1, m):
            for b2 in _level_one_block_contents(ctx1, n - m):
                combos.append((b1, b2))
    combos.sort(key=lambda pair: (pair[0].coeffs, pair[1].coeffs))
    for b1, b2 in combos:
        t1 = classify_typeA_levelone(ctx1, b1)
        t2 = classify_typeA_levelone(ctx1, b2)
        rep_type = classify_tensor(t1, t2, rank.ell)
        reports.append(
            BlockReport(
                input={
                    "ell": rank.ell,
                    "separated": True,
                    "beta1": b1.to_json(),
                    "beta2": b2.to_json(),
                },
                canonical=None,
                rep_type=rep_type,
                notes=(
                    "separated parameters: outer tensor product of two "
                    "level-one blocks "
                    f"({t1.tag} x {t2.tag})",
                ),
            )
        )
    return reports


def classify_heckeD(
    e: int,
    n: int,
    cfg: Optional[ClassifierConfig] = None,
    with_quiver: bool = False,
) -> list[BlockReport]:
    """Blocks of the rank-n type-D algebra at quantum characteristic e.

    Requires odd ground-field characteristic: the type-D algebra is then
    a subalgebra of a type-B algebra at parameter -1 fixed by an
    involution, and blocks share representation type with their covering
    blocks.
    """
    if cfg is None:
        cfg = ClassifierConfig()
    if not cfg.char_odd:
        raise UnsupportedConfigError(
            "type-D classification requires odd ground-field characteristic"
        )
    if e % 2 == 0:
        reports = classify_heckeB(e, e // 2, n, cfg, with_quiver=with_quiver)
        note = (
            "type-D block shares the representation type of its type-B "
            f"covering block with charge {e // 2}"
        )
    else:
        reports = classify_heckeB(e, None, n, cfg, with_quiver=with_quiver)
        note = (
            "type-D block shares the representation type of its type-B "
            "covering block with separated parameters"
        )
    return [
        BlockReport(
            input=r.input,
            canonical=r.canonical,
            rep_type=r.rep_type,
            quiver=r.quiver,
            notes=r.notes + (note,),
        )
        for r in reports
    ]
