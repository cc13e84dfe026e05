"""Weyl-orbit reduction of blocks to canonical labels.

Every nonzero block corresponds to a weight of the integrable module with
the context's highest weight.  Reflecting at a vertex with negative pairing
strictly lowers the root-vector height, so repeated reflection reaches the
dominant chamber; the block is then labelled by the distinguished family
member (lambda or mu) plus a multiple of the null root.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import (
    RootVec,
    lambda_rep,
    mu_rep,
    null_root,
    pair_coroot,
    simple_reflection,
)
from .fock import FockContext


class NotAWeightError(ValueError):
    """The root vector does not correspond to a nonzero block."""


class ReductionCapError(RuntimeError):
    """Dominant reduction exceeded its iteration budget."""


LAMBDA = "lambda"
MU = "mu"


@dataclass(frozen=True)
class CanonicalRep:
    """Canonical orbit label: a family member plus k copies of delta."""

    family: str
    s: int
    i: int
    k: int

    def __post_init__(self) -> None:
        if self.family not in (LAMBDA, MU):
            raise ValueError(f"family must be '{LAMBDA}' or '{MU}', got {self.family}")
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")

    def to_json(self) -> dict:
        return {"family": self.family, "s": self.s, "i": self.i, "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalRep":
        return cls(data["family"], data["s"], data["i"], data["k"])

    def __str__(self) -> str:
        return f"{self.family}(s={self.s}, i={self.i}) + {self.k}*delta"


def _lambda_range(ctx: FockContext) -> range:
    if ctx.level == 1:
        return range(0, 1)
    return range(0, (ctx.rank.ell - ctx.s + 1) // 2 + 1)


def _mu_range(ctx: FockContext) -> range:
    if ctx.level == 1:
        return range(1, 1)
    return range(1, ctx.s // 2 + 1)


def dominant_reduce(ctx: FockContext, beta: RootVec) -> RootVec:
    """Reflect at the smallest vertex with negative pairing until dominant."""
    if beta.rank != ctx.rank:
        raise ValueError("rank mismatch between context and root vector")
    weight = ctx.highest_weight()
    cap = 10 * ctx.rank.e * max(1, abs(beta.height))
    cur = beta
    for _ in range(cap):
        for i in ctx.rank.vertices:
            if pair_coroot(i, weight, cur) < 0:
                cur = simple_reflection(i, weight, cur)
                break
        else:
            return cur
    raise ReductionCapError(
        f"dominant reduction did not terminate within {cap} reflections for {beta}"
    )


def is_weight(ctx: FockContext, beta: RootVec) -> bool:
    """Whether the context's highest weight minus beta is a module weight."""
    return dominant_reduce(ctx, beta).in_positive_cone()


def rep_root(ctx: FockContext, rep: CanonicalRep) -> RootVec:
    """The root vector named by a canonical label."""
    if rep.family == LAMBDA:
        base = lambda_rep(rep.s, rep.i, ctx.rank)
    else:
        base = mu_rep(rep.s, rep.i, ctx.rank)
    return base + null_root(ctx.rank) * rep.k


def canonical_rep(ctx: FockContext, beta: RootVec) -> CanonicalRep:
    """Canonical orbit label of the block of beta.

    The dominant reduction of beta is matched against the family tables
    plus a multiple of the null root; the multiple is the minimal
    coefficient because every family member has a zero coefficient.
    """
    plus = dominant_reduce(ctx, beta)
    if not plus.in_positive_cone():
        raise NotAWeightError(f"{beta} does not label a nonzero block")
    s = ctx.s
    delta = null_root(ctx.rank)
    for k in range(min(plus.coeffs), -1, -1):
        rem = plus - delta * k
        for i in _lambda_range(ctx):
            if lambda_rep(s, i, ctx.rank) == rem:
                return CanonicalRep(LAMBDA, s, i, k)
        for i in _mu_range(ctx):
            if mu_rep(s, i, ctx.rank) == rem:
                return CanonicalRep(MU, s, i, k)
    raise RuntimeError(
        f"dominant reduction {plus} matches no family member; "
        "this contradicts the orbit classification and indicates a bug"
    )


def weyl_orbit_bfs(ctx: FockContext, beta: RootVec, radius: int) -> set[RootVec]:
    """Positive-cone members of the orbit of beta within the given number
    of reflections; a brute-force oracle for canonical_rep."""
    weight = ctx.highest_weight()
    seen = {beta}
    frontier = {beta}
    for _ in range(radius):
        nxt = set()
        for b in frontier:
            for i in ctx.rank.vertices:
                image = simple_reflection(i, weight, b)
                if image not in seen:
                    nxt.add(image)
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return {b for b in seen if b.in_positive_cone()}


def _pairing_walk(
    ctx: FockContext, start: RootVec, indices: list[int]
) -> tuple[bool, RootVec]:
    """Add simple roots in order, demanding pairing >= 1 before each step."""
    weight = ctx.highest_weight()
    cur = start
    ok = True
    for j in indices:
        if pair_coroot(j, weight, cur) < 1:
            ok = False
        cur = cur + RootVec.simple(ctx.rank, j)
    return ok, cur


def propagation_check_1(ctx: FockContext, i: int, k: int) -> bool:
    """Wildness carries from the (i, k) block to the (i-1, k+1) block:
    verify the pairing inequalities along the root additions and that the
    endpoint is the expected label."""
    ell, s = ctx.rank.ell, ctx.s
    if not 1 <= i <= (ell - s + 1) // 2:
        raise ValueError(f"i must lie in 1..{(ell - s + 1) // 2}, got {i}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    start = lambda_rep(s, i, ctx.rank) + null_root(ctx.rank) * k
    indices = list(range(s + i, ell - i + 2))
    ok, end = _pairing_walk(ctx, start, indices)
    expected = lambda_rep(s, i - 1, ctx.rank) + null_root(ctx.rank) * (k + 1)
    return ok and end == expected


def propagation_check_2(ctx: FockContext, i: int, k: int) -> bool:
    """Wildness carries from the (i, k) block to the (i+1, k) block."""
    ell, s = ctx.rank.ell, ctx.s
    if not 0 <= i <= (ell - s - 1) // 2:
        raise ValueError(f"i must lie in 0..{(ell - s - 1) // 2}, got {i}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    start = lambda_rep(s, i, ctx.rank) + null_root(ctx.rank) * k
    indices = (
        list(range(s + i, s, -1))
        + list(range(ell - i + 1, ell + 1))
        + list(range(0, s))
        + [s]
    )
    ok, end = _pairing_walk(ctx, start, indices)
    expected = lambda_rep(s, i + 1, ctx.rank) + null_root(ctx.rank) * k
    return ok and end == expected
