"""Level-two Fock space combinatorics.

Bipartitions carry residues determined by the charge pair (0, s): a node in
row r, column c of component 1 has residue c - r mod e, and c - r + s mod e
in component 2.  Nodes are ordered top to bottom with every node of
component 1 above every node of component 2 and larger row indices lower
within a component.  A level-one context reuses the same code with the
second component forced empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .cartan import AffineRank, RootVec, WeightVec
from .qpoly import QPoly


class Node(NamedTuple):
    """A box position: component 1 or 2, row and column both 1-based."""

    component: int
    row: int
    col: int


def _check_parts(parts: tuple[int, ...], label: str) -> None:
    for k, p in enumerate(parts):
        if p <= 0:
            raise ValueError(f"{label} must consist of positive parts, got {parts}")
        if k and parts[k - 1] < p:
            raise ValueError(f"{label} must be weakly decreasing, got {parts}")


@dataclass(frozen=True)
class Bipartition:
    """A pair of partitions, stored as weakly decreasing positive tuples."""

    comp1: tuple[int, ...] = ()
    comp2: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "comp1", tuple(int(p) for p in self.comp1))
        object.__setattr__(self, "comp2", tuple(int(p) for p in self.comp2))
        _check_parts(self.comp1, "component 1")
        _check_parts(self.comp2, "component 2")

    @property
    def size(self) -> int:
        return sum(self.comp1) + sum(self.comp2)

    def component(self, c: int) -> tuple[int, ...]:
        if c == 1:
            return self.comp1
        if c == 2:
            return self.comp2
        raise ValueError(f"component must be 1 or 2, got {c}")

    def cells(self) -> Iterator[Node]:
        for c, parts in ((1, self.comp1), (2, self.comp2)):
            for r, p in enumerate(parts):
                for col in range(1, p + 1):
                    yield Node(c, r + 1, col)

    def to_json(self) -> list[list[int]]:
        return [list(self.comp1), list(self.comp2)]

    @classmethod
    def from_json(cls, data: list[list[int]]) -> "Bipartition":
        if len(data) != 2:
            raise ValueError("a bipartition is a pair of partitions")
        return cls(tuple(data[0]), tuple(data[1]))

    def __str__(self) -> str:
        def one(parts: tuple[int, ...]) -> str:
            return "(" + ",".join(str(p) for p in parts) + ")" if parts else "()"

        return f"({one(self.comp1)}|{one(self.comp2)})"


@dataclass(frozen=True)
class FockContext:
    """Rank, charge s and level; fixes residues and the highest weight."""

    rank: AffineRank
    s: int = 0
    level: int = 2

    def __post_init__(self) -> None:
        if self.level not in (1, 2):
            raise ValueError(f"level must be 1 or 2, got {self.level}")
        if not 0 <= self.s <= self.rank.ell:
            raise ValueError(f"s must lie in 0..{self.rank.ell}, got {self.s}")
        if self.level == 1 and self.s != 0:
            raise ValueError("a level-one context has charge 0")

    def highest_weight(self) -> WeightVec:
        fund = [0] * self.rank.e
        fund[0] += 1
        if self.level == 2:
            fund[self.s] += 1
        return WeightVec(self.rank, tuple(fund))

    def charge(self, component: int) -> int:
        return 0 if component == 1 else self.s

    def check_shape(self, bp: Bipartition) -> None:
        if self.level == 1 and bp.comp2:
            raise ValueError("level-one context admits only one component")


def residue(ctx: FockContext, node: Node) -> int:
    """Residue of a node: (col - row + charge) mod e."""
    if node.component == 2 and ctx.level == 1:
        raise ValueError("component 2 node in a level-one context")
    if node.component not in (1, 2):
        raise ValueError(f"component must be 1 or 2, got {node.component}")
    return (node.col - node.row + ctx.charge(node.component)) % ctx.rank.e


def _component_addable(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    """Addable cells of one partition as 1-based (row, col) pairs."""
    out = []
    for r in range(len(parts) + 1):
        cur = parts[r] if r < len(parts) else 0
        if r == 0 or cur < parts[r - 1]:
            out.append((r + 1, cur + 1))
    return out


def _component_removable(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    out = []
    for r, p in enumerate(parts):
        nxt = parts[r + 1] if r + 1 < len(parts) else 0
        if p > nxt:
            out.append((r + 1, p))
    return out


def addable_nodes(ctx: FockContext, bp: Bipartition, i: int | None = None) -> list[Node]:
    """Addable nodes, top to bottom; restrict to residue i when given."""
    ctx.check_shape(bp)
    comps = (1,) if ctx.level == 1 else (1, 2)
    out = []
    for c in comps:
        for r, col in _component_addable(bp.component(c)):
            nd = Node(c, r, col)
            if i is None or residue(ctx, nd) == i % ctx.rank.e:
                out.append(nd)
    return out


def removable_nodes(ctx: FockContext, bp: Bipartition, i: int | None = None) -> list[Node]:
    """Removable nodes, top to bottom; restrict to residue i when given."""
    ctx.check_shape(bp)
    comps = (1,) if ctx.level == 1 else (1, 2)
    out = []
    for c in comps:
        for r, col in _component_removable(bp.component(c)):
            nd = Node(c, r, col)
            if i is None or residue(ctx, nd) == i % ctx.rank.e:
                out.append(nd)
    return out


def add_node(bp: Bipartition, node: Node) -> Bipartition:
    parts = list(bp.component(node.component))
    r = node.row - 1
    if r == len(parts):
        parts.append(0)
    if r >= len(parts) or parts[r] + 1 != node.col:
        raise ValueError(f"{node} is not an addable corner of {bp}")
    parts[r] += 1
    new = tuple(parts)
    if node.component == 1:
        return Bipartition(new, bp.comp2)
    return Bipartition(bp.comp1, new)


def remove_node(bp: Bipartition, node: Node) -> Bipartition:
    parts = list(bp.component(node.component))
    r = node.row - 1
    if r >= len(parts) or parts[r] != node.col:
        raise ValueError(f"{node} is not a removable corner of {bp}")
    parts[r] -= 1
    new = tuple(p for p in parts if p > 0)
    if node.component == 1:
        return Bipartition(new, bp.comp2)
    return Bipartition(bp.comp1, new)


def _is_below(a: Node, b: Node) -> bool:
    """Node order: component 1 sits above component 2, small rows above."""
    return (a.component, a.row) > (b.component, b.row)


def _stat_below(ctx: FockContext, bp: Bipartition, node: Node, i: int) -> int:
    add = sum(1 for nd in addable_nodes(ctx, bp, i) if _is_below(nd, node))
    rem = sum(1 for nd in removable_nodes(ctx, bp, i) if _is_below(nd, node))
    return add - rem


def _stat_above(ctx: FockContext, bp: Bipartition, node: Node, i: int) -> int:
    add = sum(1 for nd in addable_nodes(ctx, bp, i) if _is_below(node, nd))
    rem = sum(1 for nd in removable_nodes(ctx, bp, i) if _is_below(node, nd))
    return add - rem


def _single_node_diff(lam: Bipartition, mu: Bipartition) -> tuple[Bipartition, Node]:
    """Return (larger shape, the one node by which the two shapes differ)."""
    if lam.size == mu.size + 1:
        big, small = lam, mu
    elif mu.size == lam.size + 1:
        big, small = mu, lam
    else:
        raise ValueError("shapes must differ by exactly one node")
    diff: Node | None = None
    for c in (1, 2):
        pb, ps = big.component(c), small.component(c)
        if len(pb) < len(ps):
            raise ValueError("shapes must differ by exactly one node")
        for r in range(len(pb)):
            vb = pb[r]
            vs = ps[r] if r < len(ps) else 0
            if vb == vs:
                continue
            if vb != vs + 1 or diff is not None:
                raise ValueError("shapes must differ by exactly one node")
            diff = Node(c, r + 1, vb)
    if diff is None:
        raise ValueError("shapes must differ by exactly one node")
    return big, diff


def d_below(ctx: FockContext, lam: Bipartition, mu: Bipartition, i: int) -> int:
    """Addable minus removable i-nodes strictly below the node separating
    the two shapes, read in the larger shape.

    For a fixed residue the count is insensitive to whether the separating
    node itself is present: placing a node only toggles corners of the
    neighbouring residues.
    """
    ctx.check_shape(lam)
    ctx.check_shape(mu)
    big, node = _single_node_diff(lam, mu)
    i = i % ctx.rank.e
    if residue(ctx, node) != i:
        raise ValueError(f"shapes differ by a node of residue {residue(ctx, node)}, not {i}")
    return _stat_below(ctx, big, node, i)


def d_above(ctx: FockContext, lam: Bipartition, mu: Bipartition, i: int) -> int:
    """Mirror of d_below, counting strictly above the separating node."""
    ctx.check_shape(lam)
    ctx.check_shape(mu)
    big, node = _single_node_diff(lam, mu)
    i = i % ctx.rank.e
    if residue(ctx, node) != i:
        raise ValueError(f"shapes differ by a node of residue {residue(ctx, node)}, not {i}")
    return _stat_above(ctx, big, node, i)


def content(ctx: FockContext, bp: Bipartition) -> RootVec:
    """Sum of alpha_{res(x)} over the nodes x of the bipartition."""
    ctx.check_shape(bp)
    coeffs = [0] * ctx.rank.e
    for nd in bp.cells():
        coeffs[residue(ctx, nd)] += 1
    return RootVec(ctx.rank, tuple(coeffs))


class FockVector:
    """A finitely supported combination of bipartitions over Z[q, q^-1]."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Bipartition, QPoly] = {}
        for bp, coeff in items:
            if not isinstance(coeff, QPoly):
                coeff = QPoly({0: coeff})
            cur = acc.get(bp, QPoly.zero()) + coeff
            if cur:
                acc[bp] = cur
            else:
                acc.pop(bp, None)
        self._terms = acc

    @classmethod
    def basis(cls, bp: Bipartition) -> "FockVector":
        return cls({bp: QPoly.one()})

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    def terms(self) -> list[tuple[Bipartition, QPoly]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0].comp1, kv[0].comp2))

    def coeff(self, bp: Bipartition) -> QPoly:
        return self._terms.get(bp, QPoly.zero())

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self._terms)
        for bp, c in other._terms.items():
            cur = out.get(bp, QPoly.zero()) + c
            if cur:
                out[bp] = cur
            else:
                out.pop(bp, None)
        res = FockVector.__new__(FockVector)
        res._terms = out
        return res

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, factor: QPoly | int) -> "FockVector":
        if not isinstance(factor, QPoly):
            factor = QPoly({0: factor})
        res = FockVector.__new__(FockVector)
        res._terms = {bp: c * factor for bp, c in self._terms.items()} if factor else {}
        return res

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "FockVector(0)"
        bits = [f"({coeff})*{bp}" for bp, coeff in self.terms()]
        return "FockVector(" + " + ".join(bits) + ")"


def apply_e(ctx: FockContext, vec: FockVector, i: int) -> FockVector:
    """Lower by an i-node: e_i |lam> = sum q^{d_below} |lam minus node>."""
    i = i % ctx.rank.e
    out = FockVector.zero()
    for bp, coeff in vec.terms():
        for node in removable_nodes(ctx, bp, i):
            d = _stat_below(ctx, bp, node, i)
            out = out + FockVector({remove_node(bp, node): coeff * QPoly.monomial(d)})
    return out


def apply_f(ctx: FockContext, vec: FockVector, i: int) -> FockVector:
    """Raise by an i-node: f_i |lam> = sum q^{-d_above} |lam plus node>."""
    i = i % ctx.rank.e
    out = FockVector.zero()
    for bp, coeff in vec.terms():
        for node in addable_nodes(ctx, bp, i):
            bigger = add_node(bp, node)
            d = _stat_above(ctx, bigger, node, i)
            out = out + FockVector({bigger: coeff * QPoly.monomial(-d)})
    return out


@dataclass(frozen=True)
class Bitableau:
    """A standard bitableau recorded as its growth sequence of nodes."""

    shape: Bipartition
    growth: tuple[Node, ...]

    def filling(self) -> dict[Node, int]:
        return {node: k + 1 for k, node in enumerate(self.growth)}

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "growth": [[n.component, n.row, n.col] for n in self.growth],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Bitableau":
        return cls(
            Bipartition.from_json(data["shape"]),
            tuple(Node(c, r, col) for c, r, col in data["growth"]),
        )


def enumerate_standard(ctx: FockContext, shape: Bipartition) -> Iterator[Bitableau]:
    """Lazily yield the standard bitableaux of the shape.

    The stream is deterministic: growth sequences appear in lexicographic
    order of their (component, row) corner choices.
    """
    ctx.check_shape(shape)
    t1, t2 = shape.comp1, shape.comp2
    n = shape.size
    a1 = [0] * len(t1)
    a2 = [0] * len(t2)
    growth: list[Node] = []

    def corners() -> list[tuple[int, int]]:
        out = []
        for r in range(len(t1)):
            if a1[r] < t1[r] and (r == 0 or a1[r] < a1[r - 1]):
                out.append((1, r))
        for r in range(len(t2)):
            if a2[r] < t2[r] and (r == 0 or a2[r] < a2[r - 1]):
                out.append((2, r))
        return out

    def walk() -> Iterator[Bitableau]:
        if len(growth) == n:
            yield Bitableau(shape, tuple(growth))
            return
        for comp, r in corners():
            arr = a1 if comp == 1 else a2
            growth.append(Node(comp, r + 1, arr[r] + 1))
            arr[r] += 1
            yield from walk()
            arr[r] -= 1
            growth.pop()

    return walk()


def tableau_stats(
    ctx: FockContext, tab: Bitableau, convention: str = "post"
) -> tuple[int, tuple[int, ...]]:
    """Degree and residue sequence of a standard bitableau.

    The degree adds, node by node, the below-statistic of the placed node.
    ``convention`` picks the shape in which that statistic is read: "post"
    includes the node just placed, "pre" does not.  The two readings agree
    (placing a node only toggles corners of the neighbouring residues); both
    are kept so the agreement stays checkable.
    """
    if convention not in ("post", "pre"):
        raise ValueError(f"convention must be 'post' or 'pre', got {convention}")
    ctx.check_shape(tab.shape)
    cur = Bipartition()
    degree = 0
    residues = []
    for node in tab.growth:
        i = residue(ctx, node)
        residues.append(i)
        try:
            bigger = add_node(cur, node)
        except ValueError as exc:
            raise ValueError(f"not a standard bitableau: {exc}") from exc
        degree += _stat_below(ctx, bigger if convention == "post" else cur, node, i)
        cur = bigger
    if cur != tab.shape:
        raise ValueError("not a standard bitableau: growth does not fill the shape")
    return degree, tuple(residues)
