"""Seeded fuzzing of the series-level tree invariants."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .evaluate import TruncReport, _Timer, root_change_series, tree_oracle_table, word_series_table
from .generate import palette, random_pair, unit_moves
from .shuffle import ZERO
from .trees import ColoredPair, contract_deg2_zero_vertex, contract_zero_edge, harvest, subdivide_edge, tree_word

CLAIMS = ("tree-word", "contraction", "harvest", "root-change")


@dataclass(frozen=True)
class FuzzConfig:
    seed: int
    cases: int
    max_vertices: int = 6
    max_index: int = 3
    n_vars: int = 3
    order: int = 10


def _label(p: ColoredPair) -> str:
    t = p.tree
    verts = ",".join(f"{v}:{t.coloring[v]}" for v in sorted(t.vertices))
    edges = ",".join(f"{a}-{b}:{k}" for a, b, k in p.edge_list())
    return f"V={verts};E={edges};rt={t.root}"


def _word_table(p: ColoredPair, M: int):
    out = None
    for word, c in tree_word(p).items():
        col = [v * c for v in word_series_table(word, M)]
        out = col if out is None else [a + b for a, b in zip(out, col)]
    return out


def _rewrite(p: ColoredPair) -> ColoredPair:
    """Some contraction (or its inverse, a subdivision) that should not change the oracle."""
    t = p.tree
    for a, b, k in p.edge_list():
        if k == 0:
            for v in (a, b):
                if v != t.root and t.coloring[v] is ZERO:
                    return contract_zero_edge(p, (a, b), v)
    for v in sorted(t.vertices):
        if v != t.root and t.coloring[v] is ZERO and t.degree(v) == 2:
            return contract_deg2_zero_vertex(p, v)
    for a, b, k in p.edge_list():
        if k >= 2:
            return subdivide_edge(p, (a, b))
    return p


def _show(table) -> str:
    return "[" + ", ".join(str(v) for v in table) + "]"


def run_case(claim: str, rng: random.Random, cfg: FuzzConfig) -> TruncReport:
    colors = palette(cfg.n_vars)
    M = cfg.order
    while True:
        p = random_pair(rng, cfg.max_vertices, cfg.max_index, colors)
        if claim != "root-change":
            break
        moves = unit_moves(p)
        if moves:
            target = rng.choice(moves)
            break
    with _Timer() as tm:
        if claim == "tree-word":
            lhs, rhs = tree_oracle_table(p, M), _word_table(harvest(p), M)
        elif claim == "contraction":
            lhs, rhs = tree_oracle_table(p, M), tree_oracle_table(_rewrite(p), M)
        elif claim == "harvest":
            lhs, rhs = tree_oracle_table(p, M), tree_oracle_table(harvest(p), M)
        else:
            lhs, rhs = root_change_series(p, target, M)
        equal = list(lhs) == list(rhs) if claim != "root-change" else lhs == rhs
    params = f"{_label(p)};M={M}" + (f";new_root={target}" if claim == "root-change" else "")
    shown = (_show(lhs), _show(rhs)) if claim != "root-change" else (str(lhs), str(rhs))
    return TruncReport(claim, params, shown[0], shown[1], equal, tm.millis)


def fuzz(cfg: FuzzConfig) -> list[TruncReport]:
    rng = random.Random(cfg.seed)
    return [run_case(CLAIMS[i % len(CLAIMS)], rng, cfg) for i in range(cfg.cases)]
