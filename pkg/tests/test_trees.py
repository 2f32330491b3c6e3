import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ctree.coeffring import UNIT, Monomial
from ctree.errors import (
    CycleDetected,
    Disconnected,
    IdCollision,
    InvalidVertex,
    IsLinear,
    NotHarvestable,
    PreconditionViolated,
)
from ctree.evaluate import iter_series
from ctree.generate import linear_pair, random_pair
from ctree.shuffle import ZERO, IndexTuple, WordSum, strip_last
from ctree.trees import (
    DCH,
    BoundaryColors,
    ColoredPair,
    ColoredTree,
    admissible,
    change_root,
    contract_deg2_zero_vertex,
    contract_zero_edge,
    decompose,
    essentially_positive,
    graft,
    graft_pairs,
    harvest,
    harvestable,
    is_linear,
    o_word,
    split_root,
    subdivide_edge,
    to_dot,
    tree_word,
)

ONE = UNIT
x = Monomial.var("x")


def build(colors, edges, root):
    return ColoredPair.build(colors, edges, root)


def star():
    return build({"rt": ONE, "a": ONE, "b": ONE}, [("rt", "a", 1), ("rt", "b", 1)], "rt")


def harvested_star():
    return build({"rt'": ONE, "hub": ZERO, "a": ONE, "b": ONE}, [("rt'", "hub", 0), ("hub", "a", 1), ("hub", "b", 1)], "rt'")


seeds = st.integers(0, 2**32 - 1)


# ----------------------------------------------------------- construction


def test_cycles_and_disconnection_are_rejected():
    with pytest.raises(CycleDetected):
        ColoredTree("abc", [("a", "b"), ("b", "c"), ("c", "a")], "a", {v: ONE for v in "abc"})
    with pytest.raises(Disconnected):
        ColoredTree("abc", [("a", "b")], "a", {v: ONE for v in "abc"})
    with pytest.raises(InvalidVertex):
        ColoredTree("ab", [("a", "z")], "a", {v: ONE for v in "ab"})


# ------------------------------------------------------------- predicates


def test_essential_positivity_examples():
    assert essentially_positive(linear_pair(IndexTuple((ONE, ONE), (1, 2))))
    assert not essentially_positive(build({"a": ONE, "b": ONE}, [("a", "b", 0)], "a"))
    assert essentially_positive(harvested_star())


def test_admissibility_examples():
    assert admissible(linear_pair(IndexTuple((ONE, ONE), (1, 1))), DCH)
    assert not admissible(build({"a": ONE, "z": ZERO}, [("a", "z", 1)], "a"), DCH)
    assert not admissible(build({"a": ONE, "z": ZERO, "b": ONE}, [("a", "z", 1), ("z", "b", 1)], "z"), DCH)


def test_harvestability_examples():
    assert harvestable(linear_pair(IndexTuple((ONE, x), (2, 1))), DCH)
    assert not harvestable(star(), DCH)
    assert harvestable(harvested_star(), DCH)


# --------------------------------------------------------------- grafting


def test_grafting_a_single_tree_changes_nothing():
    t = star().tree
    assert graft([(t, "a")], "rt", ZERO) == t


def test_grafting_two_points_gives_the_cluster():
    one = ColoredTree(["p"], [], "p", {"p": ONE})
    two = ColoredTree(["q"], [], "q", {"q": ONE})
    g = graft([(one, "p"), (two, "q")], "*", x)
    assert g.vertices == frozenset({"*"}) and g.coloring["*"] == x


def test_grafting_two_chains_at_their_roots_gives_a_star():
    c1 = build({"r1": ONE, "a": ONE}, [("r1", "a", 1)], "r1")
    c2 = build({"r2": ONE, "b": ONE}, [("r2", "b", 2)], "r2")
    g = graft_pairs([(c1, "r1"), (c2, "r2")], "a", ZERO, "hub")
    assert g.root == "a"
    assert g.edge_list() == [("a", "hub", 1), ("b", "hub", 2)]
    with pytest.raises(IdCollision):
        graft_pairs([(c1, "r1"), (c1.rerooted("a"), "a")], "*", ZERO)
    with pytest.raises(InvalidVertex):
        graft_pairs([(c1, "zz"), (c2, "r2")], "*", ZERO)


# --------------------------------------------------------------- rewrites


def test_contract_zero_edge_example():
    p = build({"rt'": ONE, "hub": ZERO, "a": ONE}, [("rt'", "hub", 0), ("hub", "a", 1)], "rt'")
    q = contract_zero_edge(p, ("rt'", "hub"))
    assert q.edge_list() == [("a", "rt'", 1)]
    with pytest.raises(PreconditionViolated):
        contract_zero_edge(p, ("hub", "a"))
    root_zero = build({"z": ZERO, "a": ONE, "b": ONE}, [("z", "a", 0), ("z", "b", 1)], "z")
    with pytest.raises(PreconditionViolated):
        contract_zero_edge(root_zero, ("z", "a"), "z")


def test_degree_two_contraction_adds_indices():
    p = build({"a": ONE, "m": ZERO, "b": ONE}, [("a", "m", 2), ("m", "b", 3)], "a")
    assert contract_deg2_zero_vertex(p, "m").edge_list() == [("a", "b", 5)]
    hub = harvested_star()
    with pytest.raises(PreconditionViolated):
        contract_deg2_zero_vertex(hub.rerooted("a"), "hub")
    with pytest.raises(PreconditionViolated):
        contract_deg2_zero_vertex(p, "b")


def test_subdivision_and_its_inverse():
    p = build({"a": ONE, "b": ONE}, [("a", "b", 3)], "a")
    q = subdivide_edge(p, ("a", "b"))
    assert sorted(k for _, _, k in q.edge_list()) == [1, 1, 1]
    assert sum(1 for v in q.vertices if q.color(v) is ZERO) == 2
    while any(q.color(v) is ZERO for v in q.vertices):
        q = contract_deg2_zero_vertex(q, min(v for v in q.vertices if q.color(v) is ZERO))
    assert q == p
    with pytest.raises(PreconditionViolated):
        subdivide_edge(build({"a": ONE, "b": ONE}, [("a", "b", 1)], "a"), ("a", "b"))


def test_split_root_example_and_inverse():
    q = split_root(star())
    assert q.root == "rt'" and q.color("rt") is ZERO
    assert q.edge_list() == [("a", "rt", 1), ("b", "rt", 1), ("rt", "rt'", 0)]
    back = contract_zero_edge(q, ("rt", "rt'"))
    assert back.root == "rt'"
    assert back.edge_list() == [("a", "rt'", 1), ("b", "rt'", 1)]
    with pytest.raises(PreconditionViolated):
        split_root(linear_pair(IndexTuple((ONE,), (1,))))


# ---------------------------------------------------------------- harvest


def test_harvest_examples():
    h = harvested_star()
    assert harvest(h) is h
    assert harvest(star()) == build(
        {"rt'": ONE, "rt": ZERO, "a": ONE, "b": ONE}, [("rt'", "rt", 0), ("rt", "a", 1), ("rt", "b", 1)], "rt'"
    )
    chain = build({"a": ONE, "m": ZERO, "b": ONE}, [("a", "m", 1), ("m", "b", 1)], "a")
    assert harvest(chain).edge_list() == [("a", "b", 2)]


def test_harvest_refuses_inadmissible_input():
    with pytest.raises(PreconditionViolated):
        harvest(build({"a": ONE, "b": ONE}, [("a", "b", 0)], "a"))


@given(seeds)
def test_harvest_output_is_harvestable(seed):
    p = random_pair(random.Random(seed), max_vertices=10)
    assert harvestable(harvest(p))


# ----------------------------------------------------------------- words


def test_decompose_harvested_star():
    trunk, branches = decompose(harvested_star())
    assert len(trunk.vertices) == 2 and trunk.root == "hub"
    assert [sorted(b.edge_list()) for b in branches] == [[("a", "hub#b0", 1)], [("b", "hub#b1", 1)]]
    with pytest.raises(IsLinear):
        decompose(linear_pair(IndexTuple((ONE,), (2,))))


def test_regrafting_decomposition_recovers_the_pair():
    p = harvest(build(
        {"r": x, "a": ONE, "b": x, "c": ONE, "d": ONE},
        [("r", "a", 2), ("a", "b", 1), ("a", "c", 1), ("c", "d", 3)],
        "r",
    ))
    trunk, branches = decompose(p)
    hub = trunk.root
    items = [(trunk, hub)] + [(b, b.root) for b in branches]
    g = graft_pairs(items, p.root, ZERO, hub)
    assert g.edge_list() == p.edge_list()
    assert all(g.color(v) == p.color(v) or g.color(v) is p.color(v) for v in p.vertices)


def test_tree_word_examples():
    assert tree_word(linear_pair(IndexTuple((ONE, ONE), (1, 1)))) == WordSum.word((ONE, ONE, ONE))
    assert tree_word(harvested_star()) == WordSum.word((ONE, ONE, ONE), 2)
    single = build({"r": x}, [], "r")
    assert tree_word(single) == WordSum.word((x,))
    with pytest.raises(NotHarvestable):
        tree_word(star())


@given(seeds)
def test_tree_word_ignores_the_sentinel_name(seed):
    p = harvest(random_pair(random.Random(seed), max_vertices=7))
    assert tree_word(p) == tree_word(p, sentinel_prefix="#alt")


@given(seeds)
def test_rootless_word_matches_stripped_tree_word(seed):
    p = harvest(random_pair(random.Random(seed), max_vertices=7, colors=[ONE]))
    assert o_word(p) == strip_last(tree_word(p))


@given(seeds)
def test_tree_words_start_and_end_nonzero(seed):
    p = harvest(random_pair(random.Random(seed), max_vertices=7))
    for w, c in tree_word(p).items():
        assert c > 0 and w[0] is not ZERO and w[-1] is not ZERO


# ------------------------------------------------------------ root change


def test_root_change_trivial_and_free_moves():
    p = star()
    rc = change_root(p, "rt")
    assert rc.sign == 1 and rc.main == p and rc.forest == ()
    q = build({"a": ONE, "z": ZERO, "b": ONE}, [("a", "z", 0), ("z", "b", 1)], "a")
    rc = change_root(q, "z")
    assert rc.sign == 1 and rc.main == q.rerooted("z") and rc.forest == ()


def test_root_change_across_a_unit_edge():
    p = build({"a": ONE, "b": ONE}, [("a", "b", 1)], "a")
    rc = change_root(p, "b")
    assert rc.sign == -1 and rc.main == p.rerooted("b")
    (term,) = rc.forest
    y, z = term.factors
    assert term.sign == 1 and y.vertices == {"a"} and z.vertices == {"b"}
    lhs = iter_series(p, 12)
    rhs = iter_series(y, 12) * iter_series(z, 12) - iter_series(rc.main, 12)
    assert lhs == rhs


def test_root_change_sign_counts_path_index():
    p = build({"a": ONE, "b": ONE, "c": x}, [("a", "b", 2), ("b", "c", 1)], "a")
    assert change_root(p, "c").sign == -1
    assert change_root(p, "b").sign == 1


# ----------------------------------------------------------------- export


def test_dot_export():
    dot = to_dot(build({"r": ONE, "z": ZERO, "a": x}, [("r", "z", 1), ("z", "a", 0)], "r"))
    assert '"r" [label="r:1", shape="doublecircle"]' in dot
    assert '"z" -- "a" [label="0"]' in dot or '"a" -- "z" [label="0"]' in dot
    assert 'label="a:x"' in dot


def test_linear_detection():
    assert is_linear(linear_pair(IndexTuple((ONE, x), (1, 2))))
    assert not is_linear(star())
    assert is_linear(build({"r": ONE}, [], "r"))
