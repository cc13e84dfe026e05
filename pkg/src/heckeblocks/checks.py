"""Executable verification suites.

Two suites are exposed: the fixture suite replays every printed
graded-dimension table, classification statement, and identity the package
is built around; the oracle suite cross-checks the optimized code paths
against independent brute-force reimplementations.  Both return plain
result records so the CLI and the test suite can share them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _kernels
from .cartan import AffineRank, RootVec, lambda_rep, mu_rep, null_root, pair_coroot
from .classify import FINITE, SIMPLE, TAME, WILD, ClassifierConfig, classify_canonical
from .fock import (
    Bipartition,
    FockContext,
    FockVector,
    apply_e,
    apply_f,
    content,
    d_above,
    d_below,
    enumerate_standard,
    remove_node,
    removable_nodes,
    tableau_stats,
)
from .gdim import (
    block_bipartitions,
    count_standard,
    dim_matrix,
    graded_dim,
    kostka_q,
    nonzero_idempotents,
    quiver_bounds,
    residue_sequences,
    ungraded_block_dim,
)
from .orbits import (
    LAMBDA,
    MU,
    CanonicalRep,
    canonical_rep,
    dominant_reduce,
    is_weight,
    propagation_check_1,
    propagation_check_2,
    rep_root,
    weyl_orbit_bfs,
)
from .qpoly import QPoly, quantum_int


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        suffix = f" -- {self.detail}" if self.detail else ""
        return f"[{self.name}] {verdict}{suffix}"


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _ok(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, True, detail)


def _pair_entry(
    ctx: FockContext,
    beta: RootVec,
    nu1: tuple[int, ...],
    nu2: tuple[int, ...],
    convention: str = "post",
) -> QPoly:
    """Graded dimension between two explicit residue words, computed from
    scratch under the requested degree convention."""
    total = QPoly.zero()
    for shape in block_bipartitions(ctx, beta):
        a = kostka_q(ctx, shape, nu1, convention)
        if not a.items():
            continue
        b = a if nu2 == nu1 else kostka_q(ctx, shape, nu2, convention)
        total = total + a * b
    return total


def _diagonal_shape_a1(poly: QPoly) -> int | None:
    """Match 1 + c*q^2 + q^4 and return c, else None."""
    rest = poly - QPoly({0: 1, 4: 1})
    c = rest.coeff(2)
    if rest == QPoly({2: c}) and c >= 0:
        return c
    return None


def check_a1() -> CheckResult:
    name = "A1"
    expected_off = QPoly({2: 1})
    for ell in range(1, 6):
        rank = AffineRank(ell)
        ctx = FockContext(rank, 1, level=2)
        beta = null_root(rank)
        e = rank.e
        nu1 = tuple(range(e))
        nu2 = tuple((1 + j) % e for j in range(e))
        cs = []
        for nu in (nu1, nu2):
            diag = graded_dim(ctx, nu, nu)
            c = _diagonal_shape_a1(diag)
            if c is None or c not in (1, 2):
                return _fail(name, f"ell={ell}: diagonal {diag} not of shape 1+c*q^2+q^4")
            cs.append(c)
        off = graded_dim(ctx, nu1, nu2)
        if off != expected_off or graded_dim(ctx, nu2, nu1) != expected_off:
            return _fail(name, f"ell={ell}: off-diagonal {off} != q^2")
        has_two = 2 in cs
        if ell == 1 and (cs != [1, 1]):
            return _fail(name, f"ell=1: expected c1=c2=1, got {cs}")
        if ell >= 2 and not has_two:
            return _fail(name, f"ell={ell}: expected some c=2, got {cs}")
    return _ok(name, "null-root block tables match for ell=1..5")


def check_a2() -> CheckResult:
    name = "A2"
    rank = AffineRank(1)
    ctx = FockContext(rank, 1, level=2)
    nu1, nu2 = (0, 1, 0, 1), (1, 0, 1, 0)
    diag_expected = QPoly({0: 1, 2: 2, 4: 2, 6: 2, 8: 1})
    off_expected = QPoly({2: 1, 4: 2, 6: 1})
    for nu in (nu1, nu2):
        diag = graded_dim(ctx, nu, nu)
        if diag != diag_expected:
            return _fail(name, f"diagonal at {nu}: {diag} != {diag_expected}")
    for pair in ((nu1, nu2), (nu2, nu1)):
        off = graded_dim(ctx, *pair)
        if off != off_expected:
            return _fail(name, f"off-diagonal at {pair}: {off} != {off_expected}")
    return _ok(name, "doubled null-root block table matches")


def check_a3() -> CheckResult:
    name = "A3"
    diag_expected = QPoly({0: 1, 2: 1})
    off_expected = QPoly({1: 1})
    for ell, s in ((3, 1), (4, 1), (4, 2), (5, 2)):
        rank = AffineRank(ell)
        ctx = FockContext(rank, s, level=2)
        beta = lambda_rep(s, 1, rank)
        idems = nonzero_idempotents(ctx, beta)
        if len(idems) != s + 1:
            return _fail(
                name,
                f"(ell,s)=({ell},{s}): {len(idems)} idempotent classes, expected {s + 1}",
            )
        matrix = dim_matrix(ctx, beta, idems)
        for a in range(len(idems)):
            for b in range(len(idems)):
                got = matrix.entry(a, b)
                if a == b:
                    want = diag_expected
                elif abs(a - b) == 1:
                    want = off_expected
                else:
                    want = QPoly.zero()
                if got != want:
                    return _fail(
                        name,
                        f"(ell,s)=({ell},{s}): entry ({a},{b}) = {got}, expected {want}",
                    )
    return _ok(name, "tridiagonal tables match for all four charge pairs")


def check_a4() -> CheckResult:
    name = "A4"
    diag_expected = QPoly({0: 1, 2: 2, 4: 1})
    off_expected = QPoly({2: 1})
    fixtures = {
        (4, 1): ((0, 1, 2, 4, 0, 1), (1, 0, 2, 4, 1, 0)),
        (5, 2): ((0, 1, 2, 3, 5, 0, 1, 2), (0, 2, 1, 3, 5, 0, 2, 1)),
    }
    for (ell, s), (nu1, nu2) in fixtures.items():
        rank = AffineRank(ell)
        ctx = FockContext(rank, s, level=2)
        beta = lambda_rep(s, 2, rank)
        matrix = dim_matrix(ctx, beta, [nu1, nu2])
        for a in range(2):
            got = matrix.entry(a, a)
            if got != diag_expected:
                return _fail(name, f"(ell,s)=({ell},{s}): diagonal {got} != {diag_expected}")
        for a, b in ((0, 1), (1, 0)):
            got = matrix.entry(a, b)
            if got != off_expected:
                return _fail(name, f"(ell,s)=({ell},{s}): off-diagonal {got} != {off_expected}")
        bound = quiver_bounds(matrix)
        if not bound.wild:
            return _fail(name, f"(ell,s)=({ell},{s}): wild flag not raised")
    return _ok(name, "two-loop tables match and raise the wild flag")


def check_a5() -> CheckResult:
    name = "A5"
    rank = AffineRank(3)
    ctx = FockContext(rank, 0, level=2)
    beta = lambda_rep(0, 1, rank) + null_root(rank)
    nu = (0, 1, 2, 3, 0)
    dim = graded_dim(ctx, nu, nu).evaluate(1)
    if dim != 8:
        return _fail(name, f"ungraded corner dimension {dim} != 8")
    return _ok(name, "corner algebra dimension is 8")


def _expected_distinct_charges(i: int, k: int, ell: int) -> str:
    if (i, k) == (0, 0):
        return SIMPLE
    if (i, k) == (1, 0):
        return FINITE
    if (i, k) == (0, 1) and ell == 1:
        return TAME
    return WILD


def _expected_equal_charges(
    i: int, k: int, ell: int, char2: bool, lambda_is_sign: bool
) -> str:
    if (i, k) == (0, 0):
        return SIMPLE
    if (i, k) == (1, 0):
        return FINITE
    if (i, k) == (0, 1) and (ell == 1 or not lambda_is_sign):
        return TAME
    if (i, k) == (2, 0) and ell >= 3 and not char2:
        return TAME
    return WILD


def check_a6() -> CheckResult:
    name = "A6"
    count = 0
    for ell in range(1, 7):
        rank = AffineRank(ell)
        for s in range(1, ell + 1):
            ctx = FockContext(rank, s, level=2)
            for i in range((ell - s + 1) // 2 + 1):
                for k in range(4):
                    rep = CanonicalRep(LAMBDA, s, i, k)
                    for char2 in (False, True):
                        for sign in (False, True):
                            cfg = ClassifierConfig(char2=char2, lambda_is_sign=sign)
                            got = classify_canonical(ctx, rep, cfg).tag
                            want = _expected_distinct_charges(i, k, ell)
                            if got != want:
                                return _fail(
                                    name,
                                    f"ell={ell} s={s} i={i} k={k}: {got} != {want}",
                                )
                            count += 1
    for ell in range(1, 7):
        rank = AffineRank(ell)
        ctx = FockContext(rank, 0, level=2)
        for i in range((ell + 1) // 2 + 1):
            for k in range(4):
                rep = CanonicalRep(LAMBDA, 0, i, k)
                for char2 in (False, True):
                    for sign in (False, True):
                        cfg = ClassifierConfig(char2=char2, lambda_is_sign=sign)
                        got = classify_canonical(ctx, rep, cfg).tag
                        want = _expected_equal_charges(i, k, ell, char2, sign)
                        if got != want:
                            return _fail(
                                name,
                                f"ell={ell} s=0 i={i} k={k} char2={char2} "
                                f"sign={sign}: {got} != {want}",
                            )
                        count += 1
    return _ok(name, f"{count} classification table entries match")


def _all_partitions(total: int) -> list[tuple[int, ...]]:
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


def _all_bipartitions(total: int) -> list[Bipartition]:
    out = []
    for m in range(total + 1):
        for first in _all_partitions(m):
            for second in _all_partitions(total - m):
                out.append(Bipartition(first, second))
    return out


def _weight_vectors(ell: int, max_height: int) -> list[RootVec]:
    rank = AffineRank(ell)
    out = []
    for total in range(max_height + 1):
        for coeffs in itertools.product(range(total + 1), repeat=ell + 1):
            if sum(coeffs) == total:
                out.append(RootVec(rank, coeffs))
    return out


def check_a7() -> CheckResult:
    name = "A7"
    checked = 0
    for ell in range(1, 4):
        rank = AffineRank(ell)
        for s in range(ell + 1):
            ctx = FockContext(rank, s, level=2)
            reachable: set[tuple[int, ...]] = set()
            for n in range(7):
                for bp in _all_bipartitions(n):
                    reachable.add(content(ctx, bp).coeffs)
            for beta in _weight_vectors(ell, 6):
                oracle = beta.coeffs in reachable
                got = is_weight(ctx, beta)
                if got != oracle:
                    return _fail(
                        name,
                        f"ell={ell} s={s} beta={beta}: is_weight={got}, oracle={oracle}",
                    )
                checked += 1
                if not got:
                    continue
                rep = canonical_rep(ctx, beta)
                for member in weyl_orbit_bfs(ctx, beta, 4):
                    if canonical_rep(ctx, member) != rep:
                        return _fail(
                            name,
                            f"ell={ell} s={s}: canonical label not orbit-invariant "
                            f"at {beta} vs {member}",
                        )
            # round-trips on the representative table itself
            for i in range((ell - s + 1) // 2 + 1):
                for k in range(3):
                    rep = CanonicalRep(LAMBDA, s, i, k)
                    if canonical_rep(ctx, rep_root(ctx, rep)) != rep:
                        return _fail(name, f"lambda round-trip failed at {rep}")
                    checked += 1
            for i in range(1, s // 2 + 1):
                for k in range(3):
                    rep = CanonicalRep(MU, s, i, k)
                    if canonical_rep(ctx, rep_root(ctx, rep)) != rep:
                        return _fail(name, f"mu round-trip failed at {rep}")
                    checked += 1
    return _ok(name, f"{checked} orbit/weight checks agree with the oracle")


def check_a8() -> CheckResult:
    name = "A8"
    count = 0
    for ell in range(1, 9):
        rank = AffineRank(ell)
        for s in range(1, ell + 1):
            ctx = FockContext(rank, s, level=2)
            for k in range(3):
                for i in range(1, (ell - s + 1) // 2 + 1):
                    if not propagation_check_1(ctx, i, k):
                        return _fail(name, f"walk 1 fails at ell={ell} s={s} i={i} k={k}")
                    count += 1
                for i in range((ell - s - 1) // 2 + 1):
                    if not propagation_check_2(ctx, i, k):
                        return _fail(name, f"walk 2 fails at ell={ell} s={s} i={i} k={k}")
                    count += 1
    return _ok(name, f"{count} propagation walks verified")


def check_a9() -> CheckResult:
    name = "A9"
    count = 0
    for ell in range(1, 5):
        rank = AffineRank(ell)
        bps = _all_bipartitions(0) + _all_bipartitions(1) + _all_bipartitions(2)
        bps += _all_bipartitions(3) + _all_bipartitions(4)
        for s in range(ell + 1):
            ctx = FockContext(rank, s, level=2)
            weight = ctx.highest_weight()
            for bp in bps:
                vec = FockVector.basis(bp)
                for i in rank.vertices:
                    lhs = apply_e(ctx, apply_f(ctx, vec, i), i) - apply_f(
                        ctx, apply_e(ctx, vec, i), i
                    )
                    n_i = pair_coroot(i, weight, content(ctx, bp))
                    rhs = vec.scale(quantum_int(n_i))
                    if lhs != rhs:
                        return _fail(
                            name,
                            f"ell={ell} s={s} i={i} at {bp}: commutator mismatch",
                        )
                    count += 1
    return _ok(name, f"{count} commutator identities hold")


def check_a10() -> CheckResult:
    name = "A10"
    fixtures = []
    # null-root block, both charges adjacent
    rank = AffineRank(1)
    ctx = FockContext(rank, 1, level=2)
    fixtures.append((ctx, null_root(rank), (0, 1), (1, 0)))
    fixtures.append((ctx, null_root(rank) * 2, (0, 1, 0, 1), (1, 0, 1, 0)))
    rank4 = AffineRank(4)
    fixtures.append(
        (FockContext(rank4, 1, level=2), lambda_rep(1, 2, rank4), (0, 1, 2, 4, 0, 1), (1, 0, 2, 4, 1, 0))
    )
    rank3 = AffineRank(3)
    fixtures.append(
        (FockContext(rank3, 1, level=2), lambda_rep(1, 1, rank3), (0, 1), (1, 0))
    )
    for ctx, beta, nu1, nu2 in fixtures:
        for pair in ((nu1, nu1), (nu1, nu2), (nu2, nu2)):
            post = _pair_entry(ctx, beta, pair[0], pair[1], "post")
            pre = _pair_entry(ctx, beta, pair[0], pair[1], "pre")
            if post != pre:
                return _fail(
                    name,
                    f"conventions disagree at {pair} in block {beta}: "
                    f"post={post}, pre={pre}",
                )
    failed = [r.name for r in (check_a1(), check_a2(), check_a3(), check_a4()) if not r.passed]
    if failed:
        return _fail(
            name,
            f"{', '.join(failed)} fail; both node-placement conventions produce "
            "identical tables (verified above), so no convention choice can "
            "recover the printed values -- see the table checks for details",
        )
    return _ok(
        name,
        "node-placement conventions coincide on all fixtures; tables pinned under "
        "the post-placement reading",
    )


def acceptance_suite() -> list[CheckResult]:
    return [
        check_a1(),
        check_a2(),
        check_a3(),
        check_a4(),
        check_a5(),
        check_a6(),
        check_a7(),
        check_a8(),
        check_a9(),
        check_a10(),
    ]


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------


def _brute_addable(bp: Bipartition) -> list[tuple[int, int, int]]:
    """Cells whose addition keeps both components valid partitions."""
    out = []
    for c in (1, 2):
        parts = bp.component(c)
        for row in range(1, len(parts) + 2):
            col = (parts[row - 1] if row <= len(parts) else 0) + 1
            trial = list(parts)
            if row <= len(parts):
                trial[row - 1] += 1
            else:
                trial.append(1)
            if all(trial[r] >= trial[r + 1] for r in range(len(trial) - 1)):
                out.append((c, row, col))
    return out


def _brute_removable(bp: Bipartition) -> list[tuple[int, int, int]]:
    """Cells whose removal keeps both components valid partitions."""
    out = []
    for c in (1, 2):
        parts = bp.component(c)
        for row in range(1, len(parts) + 1):
            trial = list(parts)
            trial[row - 1] -= 1
            if all(trial[r] >= trial[r + 1] for r in range(len(trial) - 1)):
                out.append((c, row, parts[row - 1]))
    return out


def _brute_residue(ctx: FockContext, cell: tuple[int, int, int]) -> int:
    c, row, col = cell
    charge = 0 if c == 1 else ctx.s
    return (col - row + charge) % ctx.rank.e


def _brute_stat(
    ctx: FockContext,
    bp: Bipartition,
    node: tuple[int, int, int],
    i: int,
    side: str,
) -> int:
    def matters(cell: tuple[int, int, int]) -> bool:
        if side == "below":
            return (cell[0], cell[1]) > (node[0], node[1])
        return (cell[0], cell[1]) < (node[0], node[1])

    add = sum(
        1
        for cell in _brute_addable(bp)
        if _brute_residue(ctx, cell) == i and matters(cell)
    )
    rem = sum(
        1
        for cell in _brute_removable(bp)
        if _brute_residue(ctx, cell) == i and matters(cell)
    )
    return add - rem


def oracle_corner_stats() -> CheckResult:
    name = "O1"
    count = 0
    for ell in (1, 2):
        rank = AffineRank(ell)
        for s in range(ell + 1):
            ctx = FockContext(rank, s, level=2)
            for n in range(1, 5):
                for bp in _all_bipartitions(n):
                    for node in removable_nodes(ctx, bp):
                        i = _brute_residue(ctx, (node.component, node.row, node.col))
                        mu = remove_node(bp, node)
                        got_b = d_below(ctx, bp, mu, i)
                        want_b = _brute_stat(
                            ctx, bp, (node.component, node.row, node.col), i, "below"
                        )
                        got_a = d_above(ctx, bp, mu, i)
                        want_a = _brute_stat(
                            ctx, bp, (node.component, node.row, node.col), i, "above"
                        )
                        if got_b != want_b or got_a != want_a:
                            return _fail(
                                name,
                                f"stat mismatch at {bp} node {node}: "
                                f"below {got_b}/{want_b} above {got_a}/{want_a}",
                            )
                        count += 1
    return _ok(name, f"{count} corner statistics match the brute-force scan")


def _brute_kostka(ctx: FockContext, shape: Bipartition, nu: tuple[int, ...]) -> QPoly:
    """Sum q^deg over standard growths, built from raw cell sets only."""
    cells = list(shape.cells())
    total = QPoly.zero()
    for order in itertools.permutations(range(len(cells))):
        seq = [cells[j] for j in order]
        grown: list[tuple[int, ...]] = []
        partial = Bipartition((), ())
        ok = True
        deg = 0
        for step, node in enumerate(seq):
            i = _brute_residue(ctx, (node.component, node.row, node.col))
            if i != nu[step] % ctx.rank.e:
                ok = False
                break
            if (node.component, node.row, node.col) not in _brute_addable(partial):
                ok = False
                break
            comp1 = list(partial.component(1))
            comp2 = list(partial.component(2))
            target = comp1 if node.component == 1 else comp2
            if node.row <= len(target):
                target[node.row - 1] += 1
            else:
                target.append(1)
            partial = Bipartition(tuple(comp1), tuple(comp2))
            deg += _brute_stat(
                ctx, partial, (node.component, node.row, node.col), i, "below"
            )
        if ok:
            total = total + QPoly.monomial(deg)
    return total


def oracle_kostka() -> CheckResult:
    name = "O2"
    count = 0
    for ell in (1, 2):
        rank = AffineRank(ell)
        for s in range(ell + 1):
            ctx = FockContext(rank, s, level=2)
            for n in range(1, 5):
                for shape in _all_bipartitions(n):
                    words = {
                        tableau_stats(ctx, tab)[1]
                        for tab in enumerate_standard(ctx, shape)
                    }
                    for nu in sorted(words):
                        got = kostka_q(ctx, shape, nu)
                        want = _brute_kostka(ctx, shape, nu)
                        if got != want:
                            return _fail(
                                name,
                                f"kostka mismatch at shape {shape}, word {nu}: "
                                f"{got} != {want}",
                            )
                        count += 1
    return _ok(name, f"{count} tableau generating functions match brute force")


def oracle_counts() -> CheckResult:
    name = "O3"
    rank = AffineRank(2)
    ctx = FockContext(rank, 1, level=2)
    for n in range(6):
        for shape in _all_bipartitions(n):
            got = count_standard(shape)
            want = sum(1 for _ in enumerate_standard(ctx, shape))
            if got != want:
                return _fail(name, f"count mismatch at {shape}: {got} != {want}")
    return _ok(name, "hook-length counts agree with direct enumeration")


def oracle_block_tables() -> CheckResult:
    name = "O4"
    for ell, s, beta in (
        (1, 1, null_root(AffineRank(1))),
        (2, 1, null_root(AffineRank(2))),
        (2, 2, mu_rep(2, 1, AffineRank(2))),
        (3, 1, lambda_rep(1, 1, AffineRank(3))),
    ):
        rank = beta.rank
        ctx = FockContext(rank, s, level=2)
        words = residue_sequences(ctx, beta)
        total = 0
        for nu1 in words:
            for nu2 in words:
                one = graded_dim(ctx, nu1, nu2)
                other = graded_dim(ctx, nu2, nu1)
                if one != other:
                    return _fail(name, f"symmetry fails at {nu1} vs {nu2}")
                total += one.evaluate(1)
            diag = graded_dim(ctx, nu1, nu1)
            if diag.coeff(0) < 1:
                return _fail(name, f"diagonal at {nu1} has no degree-zero element")
            if not diag.is_palindromic():
                return _fail(name, f"diagonal at {nu1} is not palindromic")
        want = ungraded_block_dim(ctx, beta)
        if total != want:
            return _fail(
                name,
                f"block dimension mismatch for {beta}: table sums to {total}, "
                f"square-sum gives {want}",
            )
    return _ok(name, "block tables are symmetric and sum to the block dimension")


def oracle_conventions() -> CheckResult:
    name = "O5"
    count = 0
    for ell in (1, 2):
        rank = AffineRank(ell)
        for s in range(ell + 1):
            ctx = FockContext(rank, s, level=2)
            for n in range(1, 5):
                for shape in _all_bipartitions(n):
                    for tab in enumerate_standard(ctx, shape):
                        post = tableau_stats(ctx, tab, "post")
                        pre = tableau_stats(ctx, tab, "pre")
                        if post != pre:
                            return _fail(
                                name,
                                f"conventions differ on {tab}: {post} vs {pre}",
                            )
                        count += 1
    return _ok(name, f"{count} tableau degrees agree under both conventions")


def oracle_reduction() -> CheckResult:
    name = "O6"
    rank = AffineRank(2)
    for s in range(3):
        ctx = FockContext(rank, s, level=2)
        for beta in _weight_vectors(2, 5):
            plus = dominant_reduce(ctx, beta)
            if dominant_reduce(ctx, plus) != plus:
                return _fail(name, f"reduction of {beta} is not idempotent")
            weight = ctx.highest_weight()
            if any(pair_coroot(i, weight, plus) < 0 for i in rank.vertices):
                return _fail(name, f"reduction of {beta} is not dominant")
    return _ok(name, "dominant reduction is idempotent and lands in the chamber")


def oracle_kernel_parity() -> CheckResult:
    name = "O7"
    if not _kernels.using_numba:
        return _ok(name, "accelerated kernel disabled; single code path in use")
    import numpy as np

    rank = AffineRank(2)
    ctx = FockContext(rank, 1, level=2)
    beta = null_root(rank) * 2
    mismatches = 0
    for shape in block_bipartitions(ctx, beta):
        for nu in residue_sequences(ctx, beta):
            t1 = np.array(shape.component(1), dtype=np.int64)
            t2 = np.array(shape.component(2), dtype=np.int64)
            word = np.array(nu, dtype=np.int64)
            bound = shape.size * (len(t1) + len(t2) + 2) + 1
            fast = np.zeros(2 * bound + 1, dtype=np.int64)
            slow = np.zeros(2 * bound + 1, dtype=np.int64)
            _kernels.kostka_counts(t1, t2, word, ctx.rank.e, ctx.s, fast, bound)
            _kernels.kostka_counts_python(t1, t2, word, ctx.rank.e, ctx.s, slow, bound)
            if not np.array_equal(fast, slow):
                mismatches += 1
    if mismatches:
        return _fail(name, f"{mismatches} kernel calls disagree with the fallback")
    return _ok(name, "accelerated kernel matches the pure fallback")


def oracle_suite() -> list[CheckResult]:
    return [
        oracle_corner_stats(),
        oracle_kostka(),
        oracle_counts(),
        oracle_block_tables(),
        oracle_conventions(),
        oracle_reduction(),
        oracle_kernel_parity(),
    ]


SUITES = {
    "paper-fixtures": acceptance_suite,
    "oracle": oracle_suite,
}


def run_suite(suite: str) -> tuple[list[CheckResult], bool]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    results = SUITES[suite]()
    return results, all(r.passed for r in results)
