"""Seeded random colored pairs for fuzzing and property tests."""

from __future__ import annotations

import random
from collections.abc import Sequence

from .coeffring import UNIT, Monomial
from .shuffle import ZERO, Color, IndexTuple
from .trees import ColoredPair, edge, essentially_positive, harvest


def palette(n_vars: int) -> list[Monomial]:
    return [Monomial.var(f"x{i + 1}") for i in range(n_vars)]


def _zero_path_edge(p: ColoredPair):
    """First edge of some zero-sum path joining two nonzero vertices."""
    t = p.tree
    nonzero = set(t.nonzero_vertices())
    for s in sorted(nonzero):
        for first in t.neighbors(s):
            if p.k(s, first):
                continue
            stack = [(first, s)]
            while stack:
                v, prev = stack.pop()
                if v in nonzero:
                    return edge(s, first)
                stack.extend((w, v) for w in t.neighbors(v) if w != prev and not p.k(v, w))
    return None


def random_pair(
    rng: random.Random,
    max_vertices: int = 6,
    max_index: int = 3,
    colors: Sequence[Color] | None = None,
    zero_prob: float = 0.4,
) -> ColoredPair:
    """An admissible, essentially positive pair with a nonzero root."""
    colors = list(colors) if colors is not None else palette(3)
    n = rng.randint(1, max_vertices)
    ids = [f"v{i}" for i in range(n)]
    parents = {ids[i]: ids[rng.randrange(i)] for i in range(1, n)}
    degree = {v: 0 for v in ids}
    for a, b in parents.items():
        degree[a] += 1
        degree[b] += 1
    coloring: dict[str, Color] = {}
    for v in ids:
        if degree[v] >= 2 and rng.random() < zero_prob:
            coloring[v] = ZERO
        else:
            coloring[v] = rng.choice(colors)
    index = {edge(a, b): rng.randint(0, max_index) for a, b in parents.items()}
    root = rng.choice(sorted(v for v in ids if coloring[v] is not ZERO))

    def build():
        return ColoredPair.build(coloring, [(*sorted(e), k) for e, k in index.items()], root)

    p = build()
    while not essentially_positive(p):
        index[_zero_path_edge(p)] = 1
        p = build()
    return p


def random_harvestable(
    rng: random.Random,
    max_vertices: int = 8,
    max_index: int = 3,
    colors: Sequence[Color] | None = None,
) -> ColoredPair:
    while True:
        p = harvest(random_pair(rng, max(1, max_vertices - 2), max_index, colors))
        if len(p.vertices) <= max_vertices:
            return p


def random_linear(rng: random.Random, max_weight: int = 4) -> ColoredPair:
    """A path rooted at one end whose vertices carry pairwise distinct variables."""
    weight = rng.randint(0, max_weight)
    weights: list[int] = []
    while sum(weights) < weight:
        weights.append(rng.randint(1, weight - sum(weights)))
    names = rng.sample(palette(max_weight + 1), len(weights) + 1)
    return linear_pair(IndexTuple(tuple(names[:-1]), tuple(weights)), names[-1])


def random_tuple(rng: random.Random, weight: int, colors: Sequence[Color]) -> IndexTuple:
    weights: list[int] = []
    left = weight
    while left:
        k = rng.randint(1, left)
        weights.append(k)
        left -= k
    return IndexTuple(tuple(rng.choice(colors) for _ in weights), tuple(weights))


def linear_pair(t: IndexTuple, root_color: Color = UNIT) -> ColoredPair:
    """The path encoding ``t``: far end colored a_1, root at the other end."""
    ids = [f"u{i}" for i in range(t.depth)] + ["rt"]
    colors = dict(zip(ids, list(t.colors) + [root_color]))
    edges = [(ids[i], ids[i + 1], k) for i, k in enumerate(t.weights)]
    return ColoredPair.build(colors, edges, "rt")


def unit_moves(p: ColoredPair) -> list[str]:
    """Neighbours of the root across a 1-index edge where root, rerooted pair and both halves are admissible."""
    from .trees import admissible, change_root

    t = p.tree
    out = []
    for v in t.neighbors(t.root):
        if p.k(t.root, v) != 1 or t.coloring[v] is ZERO:
            continue
        rc = change_root(p, v)
        pieces = [rc.main] + [f for term in rc.forest for f in term.factors]
        if all(admissible(q) for q in pieces):
            out.append(v)
    return out


def random_unit_move(
    rng: random.Random, max_vertices: int = 6, colors: Sequence[Color] | None = None
) -> tuple[ColoredPair, str]:
    while True:
        p = random_pair(rng, max_vertices, colors=colors)
        moves = unit_moves(p)
        if moves:
            return p, rng.choice(moves)
