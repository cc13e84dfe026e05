"""Graded dimension engine.

The central quantity is the q-weighted tableau count K_q(shape, nu): the sum
of q^degree over standard bitableaux of the shape whose residue word is nu.
Graded dimensions between two idempotents are sums of K_q products over the
bipartitions sharing the idempotents' content.  The hot per-(shape, word)
walk runs in a compiled kernel; a pure-Python replay of the same statistics
backs the alternate degree convention and the cross-checking oracles.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .cartan import RootVec
from .fock import (
    Bipartition,
    FockContext,
    enumerate_standard,
    residue,
    tableau_stats,
)
from .qpoly import QPoly

ResidueSeq = tuple[int, ...]


class QuiverShapeError(ValueError):
    """A dimension matrix is not of the shape the quiver bound needs."""


def _as_residue_seq(ctx: FockContext, nu: Sequence[int]) -> ResidueSeq:
    e = ctx.rank.e
    return tuple(int(v) % e for v in nu)


def _residue_multiset(ctx: FockContext, shape: Bipartition) -> tuple[int, ...]:
    cnt = [0] * ctx.rank.e
    for node in shape.cells():
        cnt[residue(ctx, node)] += 1
    return tuple(cnt)


def _seq_content(ctx: FockContext, nu: ResidueSeq) -> tuple[int, ...]:
    cnt = [0] * ctx.rank.e
    for v in nu:
        cnt[v] += 1
    return tuple(cnt)


def kostka_q(
    ctx: FockContext, shape: Bipartition, nu: Sequence[int], convention: str = "post"
) -> QPoly:
    """Sum of q^degree over standard bitableaux of the shape with residue
    word nu; the zero polynomial when no tableau matches."""
    ctx.check_shape(shape)
    seq = _as_residue_seq(ctx, nu)
    if len(seq) != shape.size:
        raise ValueError(
            f"residue word has length {len(seq)}, shape has {shape.size} nodes"
        )
    if _residue_multiset(ctx, shape) != _seq_content(ctx, seq):
        return QPoly.zero()
    if convention == "pre":
        acc = QPoly.zero()
        for tab in enumerate_standard(ctx, shape):
            deg, res = tableau_stats(ctx, tab, convention="pre")
            if res == seq:
                acc = acc + QPoly.monomial(deg)
        return acc
    if convention != "post":
        raise ValueError(f"convention must be 'post' or 'pre', got {convention}")
    t1 = np.asarray(shape.comp1, dtype=np.int64)
    t2 = np.asarray(shape.comp2, dtype=np.int64)
    word = np.asarray(seq, dtype=np.int64)
    n = shape.size
    bound = n * (len(shape.comp1) + len(shape.comp2) + 2) + 1
    counts = np.zeros(2 * bound + 1, dtype=np.int64)
    _kernels.kostka_counts(t1, t2, word, ctx.rank.e, ctx.s, counts, bound)
    return QPoly({d - bound: int(c) for d, c in enumerate(counts) if c})


def _partitions(total: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    top = total if cap is None else min(cap, total)
    for first in range(top, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def block_bipartitions(ctx: FockContext, beta: RootVec) -> list[Bipartition]:
    """All bipartitions whose residue content equals beta, sorted."""
    if beta.rank != ctx.rank:
        raise ValueError("rank mismatch between context and root vector")
    if not beta.in_positive_cone():
        raise ValueError(f"{beta} is not in the positive cone")
    n = beta.height
    target = tuple(beta.coeffs)
    out = []
    for m in range(n + 1):
        if ctx.level == 1 and m != n:
            continue
        for p1 in _partitions(m):
            for p2 in _partitions(n - m):
                bp = Bipartition(p1, p2)
                if _residue_multiset(ctx, bp) == target:
                    out.append(bp)
    return sorted(out, key=lambda b: (b.comp1, b.comp2))


def residue_sequences(ctx: FockContext, beta: RootVec) -> list[ResidueSeq]:
    """Every distinct residue word realised by a standard bitableau in the
    block of beta, sorted lexicographically."""
    seen = set()
    for shape in block_bipartitions(ctx, beta):
        for tab in enumerate_standard(ctx, shape):
            _, res = tableau_stats(ctx, tab)
            seen.add(res)
    return sorted(seen)


def nonzero_idempotents(ctx: FockContext, beta: RootVec) -> list[ResidueSeq]:
    """Distinguished residue words of the block, one per equivalence class.

    Two words are equivalent when they have the same K_q value against every
    bipartition of the block; such words carry identical graded-dimension
    columns.  The returned list holds the lexicographically smallest word of
    each class, sorted; every listed word has nonzero diagonal dimension.
    """
    shapes = block_bipartitions(ctx, beta)
    table: dict[ResidueSeq, list[QPoly]] = {}
    for idx, shape in enumerate(shapes):
        for tab in enumerate_standard(ctx, shape):
            deg, res = tableau_stats(ctx, tab)
            row = table.setdefault(res, [QPoly.zero()] * len(shapes))
            row[idx] = row[idx] + QPoly.monomial(deg)
    classes: dict[tuple, ResidueSeq] = {}
    for res, polys in table.items():
        key = tuple(tuple(p.items()) for p in polys)
        cur = classes.get(key)
        if cur is None or res < cur:
            classes[key] = res
    return sorted(classes.values())


def graded_dim(ctx: FockContext, nu_prime: Sequence[int], nu: Sequence[int]) -> QPoly:
    """Graded dimension between the idempotents of two residue words:
    the sum over block bipartitions of K_q(shape, nu') * K_q(shape, nu)."""
    a = _as_residue_seq(ctx, nu_prime)
    b = _as_residue_seq(ctx, nu)
    if len(a) != len(b):
        raise ValueError(f"residue words differ in length: {len(a)} vs {len(b)}")
    if _seq_content(ctx, a) != _seq_content(ctx, b):
        return QPoly.zero()
    beta = RootVec(ctx.rank, _seq_content(ctx, a))
    acc = QPoly.zero()
    for shape in block_bipartitions(ctx, beta):
        ka = kostka_q(ctx, shape, a)
        if not ka:
            continue
        kb = ka if b == a else kostka_q(ctx, shape, b)
        if kb:
            acc = acc + ka * kb
    return acc


@dataclass(frozen=True)
class DimMatrix:
    """A symmetric matrix of graded dimensions over chosen residue words."""

    idempotents: tuple[ResidueSeq, ...]
    entries: tuple[tuple[QPoly, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.idempotents)
        if len(self.entries) != m or any(len(row) != m for row in self.entries):
            raise ValueError("entry matrix shape does not match idempotent count")
        for i in range(m):
            for j in range(m):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("dimension matrix must be symmetric")
                if not self.entries[i][j].is_nonnegative():
                    raise ValueError("graded dimensions must have nonnegative coefficients")

    @property
    def size(self) -> int:
        return len(self.idempotents)

    def entry(self, i: int, j: int) -> QPoly:
        return self.entries[i][j]

    def to_json(self) -> dict:
        return {
            "idempotents": [list(nu) for nu in self.idempotents],
            "entries": [[p.to_json() for p in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DimMatrix":
        return cls(
            tuple(tuple(int(v) for v in nu) for nu in data["idempotents"]),
            tuple(
                tuple(QPoly.from_json(p) for p in row) for row in data["entries"]
            ),
        )

    def __str__(self) -> str:
        labels = ["e(" + ",".join(str(v) for v in nu) + ")" for nu in self.idempotents]
        cells = [[str(p) for p in row] for row in self.entries]
        width0 = max((len(s) for s in labels), default=0)
        widths = [
            max([len(labels[j])] + [cells[i][j] and len(cells[i][j]) or 1 for i in range(self.size)])
            for j in range(self.size)
        ]
        lines = [
            " " * width0
            + "  "
            + "  ".join(labels[j].rjust(widths[j]) for j in range(self.size))
        ]
        for i in range(self.size):
            lines.append(
                labels[i].rjust(width0)
                + "  "
                + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.size))
            )
        return "\n".join(lines)


def dim_matrix(
    ctx: FockContext, beta: RootVec, idems: Sequence[Sequence[int]]
) -> DimMatrix:
    """Graded dimensions between all pairs of the given residue words."""
    target = tuple(beta.coeffs)
    seqs = [_as_residue_seq(ctx, nu) for nu in idems]
    for nu in seqs:
        if _seq_content(ctx, nu) != target:
            raise ValueError(f"residue word {nu} does not have content {beta}")
    shapes = block_bipartitions(ctx, beta)
    kcols = [[kostka_q(ctx, shape, nu) for shape in shapes] for nu in seqs]
    m = len(seqs)
    entries = [[QPoly.zero() for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            acc = QPoly.zero()
            for ka, kb in zip(kcols[i], kcols[j]):
                if ka and kb:
                    acc = acc + ka * kb
            entries[i][j] = entries[j][i] = acc
    result = DimMatrix(tuple(seqs), tuple(tuple(row) for row in entries))
    for i in range(m):
        diag = result.entries[i][i]
        if diag and not diag.is_palindromic():
            warnings.warn(
                f"diagonal graded dimension at e{seqs[i]} is not palindromic: {diag}",
                stacklevel=2,
            )
    return result


def _hook_product_count(parts: tuple[int, ...]) -> int:
    """Number of standard tableaux of one partition, by the hook lengths."""
    m = sum(parts)
    cols = [0] * (parts[0] if parts else 0)
    for p in parts:
        for c in range(p):
            cols[c] += 1
    hooks = 1
    for r, p in enumerate(parts):
        for c in range(p):
            hooks *= (p - c - 1) + (cols[c] - r - 1) + 1
    return math.factorial(m) // hooks


def count_standard(shape: Bipartition) -> int:
    """Number of standard bitableaux of the shape."""
    m = sum(shape.comp1)
    return (
        math.comb(shape.size, m)
        * _hook_product_count(shape.comp1)
        * _hook_product_count(shape.comp2)
    )


def ungraded_block_dim(ctx: FockContext, beta: RootVec) -> int:
    """Total dimension of the block: the sum of squared standard-bitableau
    counts over the bipartitions with content beta."""
    return sum(count_standard(shape) ** 2 for shape in block_bipartitions(ctx, beta))


@dataclass(frozen=True)
class QuiverBound:
    """Loop counts and arrow lower bounds read off a dimension matrix."""

    loops: tuple[int, ...]
    arrows: tuple[tuple[int, ...], ...]
    wild: bool

    def to_json(self) -> dict:
        return {
            "loops": list(self.loops),
            "arrows": [list(row) for row in self.arrows],
            "wild": self.wild,
        }


def quiver_bounds(matrix: DimMatrix) -> QuiverBound:
    """Read loop counts and arrow lower bounds from a dimension matrix.

    Requires every entry to be delta_ij + c_ij q^2 + (degrees >= 3 with
    nonnegative coefficients); otherwise raises QuiverShapeError to signal
    that this criterion does not apply.  Vertex i gets loops = c_ii and at
    least c_ij arrows towards j.  The wild flag is set when some vertex has
    at least two loops with arrows both ways between it and another vertex.
    """
    m = matrix.size
    c = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            poly = matrix.entries[i][j]
            delta = 1 if i == j else 0
            rest = poly - QPoly({0: delta, 2: poly.coeff(2)})
            md = rest.min_deg
            if (
                poly.coeff(0) != delta
                or poly.coeff(1) != 0
                or not poly.is_nonnegative()
                or (md is not None and md < 3)
            ):
                raise QuiverShapeError(
                    f"entry ({i},{j}) = {poly} is not delta + c*q^2 + O(q^3)"
                )
            c[i][j] = poly.coeff(2)
    wild = any(
        c[i][i] >= 2 and c[i][j] >= 1 and c[j][i] >= 1
        for i in range(m)
        for j in range(m)
        if i != j
    )
    return QuiverBound(
        tuple(c[i][i] for i in range(m)),
        tuple(tuple(row) for row in c),
        wild,
    )
