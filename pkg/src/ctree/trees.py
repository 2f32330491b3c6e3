"""Colored rooted trees with edge indices and their rewriting algorithms."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .coeffring import Monomial
from .errors import (
    CycleDetected,
    Disconnected,
    IdCollision,
    InvalidVertex,
    IsLinear,
    NotHarvestable,
    PreconditionViolated,
)
from .shuffle import ZERO, Color, WordSum, strip_last

Edge = frozenset


def edge(a: str, b: str) -> Edge:
    return frozenset((a, b))


def _ends(e: Edge) -> tuple[str, str]:
    a, b = sorted(e)
    return a, b


FRESH = Monomial.var("#z")


@dataclass(frozen=True)
class BoundaryColors:
    start: Color = ZERO
    end: Color = FRESH


DCH = BoundaryColors()


class ColoredTree:
    __slots__ = ("vertices", "edges", "root", "coloring", "_adj", "_parent")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]], root: str, coloring: Mapping[str, Color]):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(frozenset(e) for e in edges)
        self.root = root
        self.coloring = dict(coloring)
        if root not in self.vertices:
            raise InvalidVertex(f"root {root!r} is not a vertex")
        if set(self.coloring) != self.vertices:
            raise InvalidVertex("coloring must cover exactly the vertex set")
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        comp = {v: v for v in self.vertices}

        def find(v):
            while comp[v] != v:
                comp[v] = comp[comp[v]]
                v = comp[v]
            return v

        for e in self.edges:
            if len(e) != 2:
                raise InvalidVertex(f"degenerate edge {sorted(e)}")
            a, b = _ends(e)
            if a not in adj or b not in adj:
                raise InvalidVertex(f"edge {a}-{b} mentions an unknown vertex")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise CycleDetected(f"edge {a}-{b} closes a cycle")
            comp[ra] = rb
            adj[a].append(b)
            adj[b].append(a)
        if len({find(v) for v in self.vertices}) > 1:
            raise Disconnected("tree is not connected")
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        parent: dict[str, str | None] = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in self._adj[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        self._parent = parent

    def color(self, v: str) -> Color:
        return self.coloring[v]

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def parent(self, v: str) -> str | None:
        return self._parent[v]

    def children(self, v: str) -> tuple[str, ...]:
        p = self._parent[v]
        return tuple(w for w in self._adj[v] if w != p)

    def path(self, v: str, w: str) -> list[str]:
        """Vertices on the unique path from v to w, both ends included."""
        up_v = [v]
        while self._parent[up_v[-1]] is not None:
            up_v.append(self._parent[up_v[-1]])
        pos = {x: i for i, x in enumerate(up_v)}
        up_w = [w]
        while up_w[-1] not in pos:
            up_w.append(self._parent[up_w[-1]])
        meet = up_w[-1]
        return up_v[: pos[meet] + 1] + up_w[-2::-1]

    def subtree(self, v: str) -> set[str]:
        out, stack = set(), [v]
        while stack:
            x = stack.pop()
            out.add(x)
            stack.extend(self.children(x))
        return out

    def postorder(self) -> list[str]:
        out: list[str] = []
        stack = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                out.append(v)
                continue
            stack.append((v, True))
            for c in reversed(self.children(v)):
                stack.append((c, False))
        return out

    def nonzero_vertices(self) -> list[str]:
        return sorted(v for v in self.vertices if self.coloring[v] is not ZERO)

    def rerooted(self, r: str) -> "ColoredTree":
        return ColoredTree(self.vertices, self.edges, r, self.coloring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredTree):
            return NotImplemented
        return (self.vertices, self.edges, self.root, self.coloring) == (
            other.vertices,
            other.edges,
            other.root,
            other.coloring,
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.root))

    def __repr__(self) -> str:
        cols = ", ".join(f"{v}:{self.coloring[v]}" for v in sorted(self.vertices))
        es = ", ".join("-".join(_ends(e)) for e in sorted(self.edges, key=_ends))
        return f"ColoredTree(root={self.root}, [{cols}], [{es}])"


class ColoredPair:
    """A colored rooted tree together with an index on its edges."""

    __slots__ = ("tree", "index")

    def __init__(self, tree: ColoredTree, index: Mapping[Edge, int]):
        idx = {frozenset(e): int(k) for e, k in index.items()}
        if set(idx) != set(tree.edges):
            raise InvalidVertex("index must be defined on exactly the tree's edges")
        if any(k < 0 for k in idx.values()):
            raise PreconditionViolated("indices must be nonnegative")
        self.tree = tree
        self.index = idx

    @classmethod
    def build(cls, colors: Mapping[str, Color], edges: Iterable[tuple[str, str, int]], root: str) -> "ColoredPair":
        edges = list(edges)
        tree = ColoredTree(colors.keys(), [(a, b) for a, b, _ in edges], root, colors)
        return cls(tree, {edge(a, b): k for a, b, k in edges})

    @property
    def root(self) -> str:
        return self.tree.root

    @property
    def vertices(self) -> frozenset:
        return self.tree.vertices

    def color(self, v: str) -> Color:
        return self.tree.coloring[v]

    def k(self, a: str, b: str) -> int:
        return self.index[edge(a, b)]

    def k_v(self, v: str) -> int:
        p = self.tree.parent(v)
        return 1 if p is None else self.index[edge(v, p)]

    def edge_list(self) -> list[tuple[str, str, int]]:
        return sorted((*_ends(e), k) for e, k in self.index.items())

    def rerooted(self, r: str) -> "ColoredPair":
        if r not in self.tree.vertices:
            raise InvalidVertex(f"{r!r} is not a vertex")
        return ColoredPair(self.tree.rerooted(r), self.index)

    def recolored(self, f) -> "ColoredPair":
        t = self.tree
        return ColoredPair(ColoredTree(t.vertices, t.edges, t.root, {v: f(v, c) for v, c in t.coloring.items()}), self.index)

    def nonzero_count(self) -> int:
        return len(self.tree.nonzero_vertices())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredPair):
            return NotImplemented
        return self.tree == other.tree and self.index == other.index

    def __hash__(self) -> int:
        return hash(self.tree)

    def __repr__(self) -> str:
        t = self.tree
        cols = ", ".join(f"{v}:{t.coloring[v]}" for v in sorted(t.vertices))
        es = ", ".join(f"{a}-{k}-{b}" for a, b, k in self.edge_list())
        return f"ColoredPair(root={t.root}, [{cols}], [{es}])"


def _fresh(taken: Iterable[str], base: str) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    i = 1
    while f"{base}~{i}" in taken:
        i += 1
    return f"{base}~{i}"


def _rebuild(colors: Mapping[str, Color], index: Mapping[Edge, int], root: str) -> ColoredPair:
    tree = ColoredTree(colors.keys(), index.keys(), root, colors)
    return ColoredPair(tree, index)


# ---------------------------------------------------------------- predicates


def essentially_positive(p: ColoredPair) -> bool:
    t = p.tree
    nonzero = set(t.nonzero_vertices())
    # walk from every nonzero vertex; a zero-sum path may only pass through
    # zero-colored vertices before hitting another nonzero one
    for s in nonzero:
        stack = [(s, None)]
        while stack:
            v, prev = stack.pop()
            for w in t.neighbors(v):
                if w == prev or p.k(v, w) != 0:
                    continue
                if w in nonzero:
                    return False
                stack.append((w, v))
    return True


def admissible(p: ColoredPair, b: BoundaryColors = DCH) -> bool:
    t = p.tree
    for v in t.vertices:
        if t.coloring[v] == b.start and t.degree(v) <= 1:
            return False
    return t.coloring[t.root] not in (b.start, b.end)


def _colors_equal(a: Color, b: Color) -> bool:
    if a is ZERO or b is ZERO:
        return a is b
    return a == b


def harvestable(p: ColoredPair, b: BoundaryColors = DCH) -> bool:
    t = p.tree
    if not admissible(p, b) or t.degree(t.root) != 1 and len(t.vertices) > 1:
        return False
    for v in t.vertices:
        c = t.coloring[v]
        d = t.degree(v)
        if c is ZERO:
            if d == 2:
                return False
        elif d > 2:
            return False
        if v != t.root and p.k_v(v) == 0:
            if c is not ZERO or t.coloring[t.parent(v)] is ZERO:
                return False
    return True


def is_linear(p: ColoredPair) -> bool:
    t = p.tree
    if len(t.vertices) == 1:
        return True
    return t.degree(t.root) == 1 and all(t.degree(v) <= 2 for v in t.vertices)


# ------------------------------------------------------------------ grafting


def graft(
    items: Sequence[tuple[ColoredTree, str]],
    new_root: str,
    cluster_color: Color,
    cluster_id: str = "*",
) -> ColoredTree:
    pairs = [(ColoredPair(t, {e: 0 for e in t.edges}), v) for t, v in items]
    return graft_pairs(pairs, new_root, cluster_color, cluster_id).tree


def graft_pairs(
    items: Sequence[tuple[ColoredPair, str]],
    new_root: str,
    cluster_color: Color,
    cluster_id: str = "*",
) -> ColoredPair:
    """Merge the chosen vertex of every pair into one cluster vertex."""
    if not items:
        raise InvalidVertex("nothing to graft")
    seen: set[str] = set()
    for p, v in items:
        if v not in p.vertices:
            raise InvalidVertex(f"{v!r} is not a vertex of its tree")
        if seen & p.vertices:
            raise IdCollision(f"vertex ids shared between trees: {sorted(seen & p.vertices)}")
        seen |= p.vertices
    if len(items) == 1:
        p, _ = items[0]
        return p if new_root == p.root else p.rerooted(new_root)
    chosen = {v for _, v in items}
    survivors = seen - chosen
    if cluster_id in survivors:
        raise IdCollision(f"cluster id {cluster_id!r} already used")
    if new_root != cluster_id and new_root not in survivors:
        raise InvalidVertex(f"new root {new_root!r} does not survive grafting")
    colors: dict[str, Color] = {cluster_id: cluster_color}
    index: dict[Edge, int] = {}
    for p, v in items:
        for w in p.vertices:
            if w != v:
                colors[w] = p.color(w)
        for e, k in p.index.items():
            a, b = _ends(e)
            a = cluster_id if a == v else a
            b = cluster_id if b == v else b
            index[edge(a, b)] = k
    return _rebuild(colors, index, new_root)


# ------------------------------------------------------------------ rewrites


def contract_zero_edge(p: ColoredPair, e: Iterable[str], v: str | None = None) -> ColoredPair:
    """Merge the zero-colored endpoint v of a 0-index edge into the other end."""
    e = frozenset(e)
    if e not in p.index:
        raise PreconditionViolated(f"{sorted(e)} is not an edge")
    t = p.tree
    if v is None:
        ok = [x for x in e if t.coloring[x] is ZERO and x != t.root]
        if not ok:
            raise PreconditionViolated("no zero-colored non-root endpoint")
        ok.sort(key=lambda x: (t.parent(x) is None or t.parent(x) not in e, x))
        v = ok[0]
    if v not in e:
        raise PreconditionViolated(f"{v!r} is not an endpoint")
    if t.coloring[v] is not ZERO or v == t.root:
        raise PreconditionViolated("removed endpoint must be zero-colored and not the root")
    if p.index[e] != 0:
        raise PreconditionViolated("edge index must be 0")
    (w,) = e - {v}
    colors = {x: c for x, c in t.coloring.items() if x != v}
    index: dict[Edge, int] = {}
    for f, k in p.index.items():
        if f == e:
            continue
        if v in f:
            (x,) = f - {v}
            f = edge(w, x)
        index[f] = k
    return _rebuild(colors, index, t.root)


def contract_deg2_zero_vertex(p: ColoredPair, v: str) -> ColoredPair:
    t = p.tree
    if v not in t.vertices:
        raise PreconditionViolated(f"{v!r} is not a vertex")
    if t.coloring[v] is not ZERO or v == t.root or t.degree(v) != 2:
        raise PreconditionViolated("need a zero-colored non-root vertex of degree 2")
    w1, w2 = t.neighbors(v)
    colors = {x: c for x, c in t.coloring.items() if x != v}
    index = {f: k for f, k in p.index.items() if v not in f}
    index[edge(w1, w2)] = p.k(v, w1) + p.k(v, w2)
    return _rebuild(colors, index, t.root)


def _subdivide(p: ColoredPair, a: str, b: str) -> tuple[ColoredPair, list[str]]:
    k = p.k(a, b)
    if k < 2:
        raise PreconditionViolated("only edges of index >= 2 are subdivided")
    colors = dict(p.tree.coloring)
    index = {f: j for f, j in p.index.items() if f != edge(a, b)}
    mids: list[str] = []
    prev = a
    for i in range(1, k):
        m = _fresh(colors, f"{a}~{b}#{i}")
        colors[m] = ZERO
        index[edge(prev, m)] = 1
        mids.append(m)
        prev = m
    index[edge(prev, b)] = 1
    return _rebuild(colors, index, p.root), mids


def subdivide_edge(p: ColoredPair, e: Iterable[str]) -> ColoredPair:
    e = frozenset(e)
    if e not in p.index:
        raise PreconditionViolated(f"{sorted(e)} is not an edge")
    a, b = _ends(e)
    return _subdivide(p, a, b)[0]


def split_root(p: ColoredPair, new_root: str | None = None) -> ColoredPair:
    """Give the root a fresh terminal copy; the old position becomes a zero hub."""
    t = p.tree
    rt = t.root
    if t.degree(rt) < 2 or t.coloring[rt] is ZERO:
        raise PreconditionViolated("split_root needs a nonzero root of degree >= 2")
    r = new_root or _fresh(t.vertices, f"{rt}'")
    if r in t.vertices:
        raise IdCollision(f"{r!r} already used")
    colors = dict(t.coloring)
    colors[r] = colors[rt]
    colors[rt] = ZERO
    index = dict(p.index)
    index[edge(r, rt)] = 0
    return _rebuild(colors, index, r)


def split_vertex(p: ColoredPair, v: str) -> ColoredPair:
    """Move the children of a non-root nonzero vertex onto a new zero hub below it."""
    t = p.tree
    if v == t.root or t.coloring[v] is ZERO or not t.children(v):
        raise PreconditionViolated("split_vertex needs a nonzero non-root inner vertex")
    h = _fresh(t.vertices, f"{v}#h")
    colors = dict(t.coloring)
    colors[h] = ZERO
    index = {}
    kids = set(t.children(v))
    for f, k in p.index.items():
        if v in f and (f - {v}) <= kids:
            (c,) = f - {v}
            f = edge(h, c)
        index[f] = k
    index[edge(v, h)] = 0
    return _rebuild(colors, index, t.root)


def _absorb_zero_root(p: ColoredPair) -> ColoredPair:
    t = p.tree
    rt = t.root
    for w in t.neighbors(rt):
        if p.k(rt, w) == 0 and t.coloring[w] is not ZERO:
            return contract_zero_edge(p.rerooted(w), edge(rt, w), rt)
    return p


def harvest(p: ColoredPair, b: BoundaryColors = DCH) -> ColoredPair:
    """Rewrite an admissible, essentially positive pair into harvestable form."""
    t = p.tree
    if not admissible(p, b) or _colors_equal(t.coloring[t.root], b.start) or not essentially_positive(p):
        raise PreconditionViolated("harvest needs an admissible, essentially positive pair")
    if harvestable(p, b):
        return p
    # a zero-colored root (only legal when the path does not start at 0)
    # sitting on a 0-index edge is moved across that edge and absorbed
    while p.tree.coloring[p.root] is ZERO:
        q = _absorb_zero_root(p)
        if q is p:
            break
        p = q

    def step(find, apply):
        nonlocal p
        while True:
            hit = find(p)
            if hit is None:
                return
            p = apply(p, hit)

    def zero_edge(q):
        t = q.tree
        for a, c, k in q.edge_list():
            if k:
                continue
            for v in sorted((a, c), key=lambda x: x == t.root or t.parent(x) not in (a, c)):
                if t.coloring[v] is ZERO and v != t.root:
                    return edge(a, c), v
        return None

    step(zero_edge, lambda q, hit: contract_zero_edge(q, hit[0], hit[1]))

    def deg2_zero(q):
        t = q.tree
        for v in sorted(t.vertices):
            if t.coloring[v] is ZERO and v != t.root and t.degree(v) == 2:
                return v
        return None

    step(deg2_zero, contract_deg2_zero_vertex)

    def branched_nonzero(q):
        t = q.tree
        for v in sorted(t.vertices):
            if v != t.root and t.coloring[v] is not ZERO and t.degree(v) >= 3:
                return v
        return None

    step(branched_nonzero, split_vertex)

    if p.tree.degree(p.root) >= 2:
        if p.tree.coloring[p.root] is ZERO:
            raise PreconditionViolated("cannot make a zero-colored root terminal")
        p = split_root(p)
    if not harvestable(p, b):
        raise PreconditionViolated("harvest did not reach a harvestable pair")
    return p


# ---------------------------------------------------------- words from trees


def _sentinel(prefix: str, level: int) -> Monomial:
    return Monomial.var(f"{prefix}{level}")


def _decompose(p: ColoredPair, level: int, prefix: str) -> tuple[ColoredPair, list[ColoredPair]]:
    t = p.tree
    trunk_path = [t.root]
    while t.degree(trunk_path[-1]) <= 2:
        kids = t.children(trunk_path[-1])
        if not kids:
            raise IsLinear("pair has no branched vertex")
        trunk_path.append(kids[0])
    hub = trunk_path[-1]
    s = _sentinel(prefix, level)
    colors = {v: t.coloring[v] for v in trunk_path}
    colors[hub] = s
    index = {edge(a, c): p.k(a, c) for a, c in zip(trunk_path, trunk_path[1:])}
    trunk = _rebuild(colors, index, hub)
    branches = []
    for j, c in enumerate(t.children(hub)):
        sub = t.subtree(c)
        w = _fresh(t.vertices, f"{hub}#b{j}")
        bcolors = {v: t.coloring[v] for v in sub}
        bcolors[w] = s
        bindex = {e: k for e, k in p.index.items() if e <= sub}
        bindex[edge(w, c)] = p.k(hub, c)
        branches.append(_rebuild(bcolors, bindex, w))
    return trunk, branches


def decompose(p: ColoredPair, b: BoundaryColors = DCH, sentinel_prefix: str = "#s") -> tuple[ColoredPair, list[ColoredPair]]:
    if not harvestable(p, b):
        raise NotHarvestable("decompose needs a harvestable pair")
    if is_linear(p):
        raise IsLinear("linear pairs use the linear word rule")
    return _decompose(p, 0, sentinel_prefix)


def _chain(p: ColoredPair) -> list[str]:
    """Vertices of a linear pair from the far end to the root."""
    t = p.tree
    out = [t.root]
    while True:
        kids = t.children(out[-1])
        if not kids:
            break
        out.append(kids[0])
    return out[::-1]


def _linear_word(p: ColoredPair) -> tuple:
    letters: list = []
    chain = _chain(p)
    for v in chain[:-1]:
        k = p.k_v(v)
        if k < 1:
            raise NotHarvestable("linear pair with a 0-index edge")
        letters.append(p.color(v))
        letters.extend([ZERO] * (k - 1))
    letters.append(p.color(chain[-1]))
    return tuple(letters)


def _word(p: ColoredPair, level: int, prefix: str) -> WordSum:
    if is_linear(p):
        return WordSum.word(_linear_word(p))
    trunk, branches = _decompose(p, level, prefix)
    acc = WordSum.one()
    for br in branches:
        acc = acc * strip_last(_word(br, level + 1, prefix))
    hub = trunk.root
    (u0,) = trunk.tree.neighbors(hub)
    k0 = trunk.k(hub, u0)
    rest_vertices = trunk.vertices - {hub}
    rest = _rebuild(
        {v: trunk.color(v) for v in rest_vertices},
        {e: k for e, k in trunk.index.items() if hub not in e},
        p.root,
    )
    return acc.append((ZERO,) * k0).concat(_word(rest, level + 1, prefix))


def tree_word(p: ColoredPair, b: BoundaryColors = DCH, sentinel_prefix: str = "#s") -> WordSum:
    if not harvestable(p, b):
        raise NotHarvestable("tree_word needs a harvestable pair")
    return _word(p, 0, sentinel_prefix)


def o_word(p: ColoredPair) -> WordSum:
    """Word of a {0,1}-colored harvestable pair with the root letter left out."""
    if not harvestable(p, DCH):
        raise NotHarvestable("o_word needs a harvestable pair")
    return _o_word(p, 0)


def _o_word(p: ColoredPair, level: int) -> WordSum:
    if is_linear(p):
        letters: list = []
        for v in _chain(p)[:-1]:
            letters.append(p.color(v))
            letters.extend([ZERO] * (p.k_v(v) - 1))
        return WordSum.word(tuple(letters))
    trunk, branches = _decompose(p, level, "#o")
    acc = WordSum.one()
    for br in branches:
        acc = acc * _o_word(br, level + 1)
    hub = trunk.root
    (u0,) = trunk.tree.neighbors(hub)
    rest_vertices = trunk.vertices - {hub}
    rest = _rebuild(
        {v: trunk.color(v) for v in rest_vertices},
        {e: k for e, k in trunk.index.items() if hub not in e},
        p.root,
    )
    return acc.append((ZERO,) * trunk.k(hub, u0)).concat(_o_word(rest, level + 1))


# --------------------------------------------------------------- root change


@dataclass(frozen=True)
class ForestTerm:
    sign: int
    factors: tuple


@dataclass(frozen=True)
class RootChange:
    """I(p) = sign * I(main) + sum over forest of sign_j * prod I(factor)."""

    sign: int
    main: ColoredPair
    forest: tuple


def split_at_edge(p: ColoredPair, a: str, b: str) -> tuple[ColoredPair, ColoredPair]:
    """Remove the edge {a, b}; return the side of a rooted at a and the side of b rooted at b."""
    t = p.tree
    e = edge(a, b)
    if e not in p.index:
        raise PreconditionViolated(f"{a}-{b} is not an edge")
    sides = []
    for r, other in ((a, b), (b, a)):
        seen, stack = {r}, [r]
        while stack:
            v = stack.pop()
            for w in t.neighbors(v):
                if w not in seen and not (v == r and w == other):
                    seen.add(w)
                    stack.append(w)
        colors = {v: t.coloring[v] for v in seen}
        index = {f: k for f, k in p.index.items() if f <= seen}
        sides.append(_rebuild(colors, index, r))
    return sides[0], sides[1]


def _contract_fresh(p: ColoredPair, fresh: set[str]) -> ColoredPair:
    changed = True
    while changed:
        changed = False
        for v in sorted(fresh & p.vertices):
            t = p.tree
            if v != t.root and t.coloring[v] is ZERO and t.degree(v) == 2:
                p = contract_deg2_zero_vertex(p, v)
                changed = True
                break
    return p


def change_root(p: ColoredPair, new_root: str) -> RootChange:
    if new_root not in p.vertices:
        raise InvalidVertex(f"{new_root!r} is not a vertex")
    if new_root == p.root:
        return RootChange(1, p, ())
    path = p.tree.path(p.root, new_root)
    cur = p
    fresh: set[str] = set()
    walk = [path[0]]
    for a, b in zip(path, path[1:]):
        if cur.k(a, b) >= 2:
            cur, mids = _subdivide(cur, a, b)
            fresh.update(mids)
            walk.extend(mids)
        walk.append(b)
    sign = 1
    forest = []
    for a, b in zip(walk, walk[1:]):
        if cur.k(a, b) == 1:
            y, z = split_at_edge(cur, a, b)
            forest.append(ForestTerm(sign, (_contract_fresh(y, fresh), _contract_fresh(z, fresh))))
            sign = -sign
        cur = cur.rerooted(b)
    return RootChange(sign, _contract_fresh(cur, fresh), tuple(forest))


# ------------------------------------------------------------------- export


def to_dot(p: ColoredPair) -> str:
    t = p.tree
    lines = ["graph T {"]
    for v in sorted(t.vertices):
        shape = ', shape="doublecircle"' if v == t.root else ""
        lines.append(f'  "{v}" [label="{v}:{t.coloring[v]}"{shape}];')
    for a, b, k in p.edge_list():
        lines.append(f'  "{a}" -- "{b}" [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
