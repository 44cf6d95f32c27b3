import math
import random

import pytest

from corex.dom import parse_html
from corex.treedist import (
    CallCounter,
    CostModel,
    Mapping,
    SimTree,
    brute_force_rtdm,
    brute_force_stm,
    from_sexpr,
    project_sim,
    rtdm,
    simple_tree_matching,
    simple_tree_matching_recursive,
    stm_mapping,
    stm_normalized,
    to_sexpr,
    tree,
    validate_mapping,
)
from treegen import random_pair, random_simtree


def test_simtree_size_and_sexpr():
    t = from_sexpr("a(b,c(d))")
    assert t.size == 4 and to_sexpr(t) == "a(b,c(d))"
    assert t == tree("a", "b", tree("c", "d"))


def test_project_sim():
    assert to_sexpr(project_sim(parse_html("<p>x</p>"))) == "document(p)"
    t = project_sim(parse_html("<div><p></p><p></p></div>"))
    assert to_sexpr(t) == "document(div(p,p))" and t.size == 4
    assert project_sim(parse_html("<script>x</script>")).size == 2


@pytest.mark.parametrize("a, b, expected", [
    ("a", "a", 1),
    ("a", "b", 0),
    ("a(b,c)", "a(b)", 2),
    ("a(b,c)", "a(c,b)", 2),
    ("a(b)", "c(b)", 0),
])
def test_stm_examples(a, b, expected):
    a, b = from_sexpr(a), from_sexpr(b)
    assert simple_tree_matching(a, b) == expected
    assert simple_tree_matching_recursive(a, b) == expected
    assert brute_force_stm(a, b) == expected


def test_stm_normalized():
    t = from_sexpr("a(b(c,d),e)")
    assert stm_normalized(t, t) == 1.0
    assert stm_normalized(tree("a"), tree("b")) == 0.0
    assert stm_normalized(from_sexpr("a(b,c)"), from_sexpr("a(b)")) == pytest.approx(0.8)


@pytest.mark.parametrize("a, b, expected", [
    ("a(b(c),d)", "a(b(c),d)", 0),
    ("a(b)", "a(c)", 1),
    ("a(b,c)", "a(b)", 1),
    ("a", "a(b,c)", 2),
    ("a(b(x))", "a(c(x))", 3),
    ("a(b)", "c(b)", 3),
    ("a(b(c))", "b", 3),
])
def test_rtdm_examples(a, b, expected):
    a, b = from_sexpr(a), from_sexpr(b)
    assert rtdm(a, b) == expected
    assert brute_force_rtdm(a, b) == expected


def test_rtdm_epsilon_prunes_substitution():
    a, b = from_sexpr("r(x,y(z),w)"), from_sexpr("r(q,y(z),w)")
    assert rtdm(a, b) == 1
    # hand-traced: after the x/q relabel every diagonal prefix is >= 1, so with
    # epsilon 0 no later pair may match and y(z), w are deleted and re-inserted
    assert rtdm(a, b, CostModel.unit(epsilon=0)) == 7
    assert rtdm(a, b, CostModel.unit(epsilon=1)) == 1


def test_rtdm_custom_costs_match_oracle():
    costs = CostModel(
        delete=lambda n: 2.0,
        insert=lambda n: 0.5,
        replace=lambda x, y: 1.25,
    )
    rng = random.Random(5)
    for _ in range(150):
        a, b = random_pair(rng, 6)
        assert rtdm(a, b, costs) == pytest.approx(brute_force_rtdm(a, b, costs))


def test_rtdm_node_dependent_costs_match_oracle():
    weight = {"a": 1.0, "b": 3.0, "c": 0.5}
    costs = CostModel(
        delete=lambda n: weight[n.label],
        insert=lambda n: weight[n.label] + 1,
        replace=lambda x, y: abs(weight[x.label] - weight[y.label]) + len(x.children),
        label_only=False,
    )
    rng = random.Random(6)
    for _ in range(150):
        a, b = random_pair(rng, 6)
        assert rtdm(a, b, costs) == pytest.approx(brute_force_rtdm(a, b, costs))


def test_cost_model_validation():
    with pytest.raises(ValueError):
        CostModel(epsilon=-1)
    with pytest.raises(ValueError):
        rtdm(tree("a", "b"), tree("a"), CostModel(delete=lambda n: -1.0))


def test_validate_mapping_examples():
    ab = from_sexpr("a(b)")
    assert validate_mapping(Mapping(), ab, ab)
    assert validate_mapping(Mapping([(0, 0), (1, 1)]), ab, ab)
    assert not validate_mapping(Mapping([(1, 0), (0, 1)]), ab, ab)


def test_validate_mapping_order_and_injectivity():
    t = from_sexpr("a(b,c)")
    assert not validate_mapping([(1, 2), (2, 1)], t, t)  # siblings swapped
    assert not validate_mapping([(1, 1), (2, 1)], t, t)  # two nodes onto one
    assert validate_mapping([(1, 2)], t, t)
    with pytest.raises(ValueError):
        validate_mapping([(0, 9)], t, t)


def test_oracle_size_limits():
    big = random_simtree(random.Random(0), 9)
    with pytest.raises(ValueError):
        brute_force_stm(big, tree("a"))
    with pytest.raises(ValueError):
        brute_force_rtdm(random_simtree(random.Random(0), 8), tree("a"))


def test_stm_properties():
    rng = random.Random(21)
    for _ in range(100):
        a, b = random_pair(rng, 25, "abcd")
        counter = CallCounter()
        s = simple_tree_matching_recursive(a, b, counter)
        assert s == simple_tree_matching(a, b) == simple_tree_matching(b, a)
        assert s <= min(a.size, b.size)
        assert simple_tree_matching(a, a) == a.size
        assert counter.calls <= (a.size + 1) * (b.size + 1)


def test_stm_mapping_is_valid_and_maximal():
    rng = random.Random(22)
    for _ in range(200):
        a, b = random_pair(rng, 10)
        m = stm_mapping(a, b)
        assert validate_mapping(m, a, b)
        assert len(m) == simple_tree_matching(a, b)


def test_rtdm_properties():
    rng = random.Random(23)
    for _ in range(100):
        a, b = random_pair(rng, 25)
        assert rtdm(a, a) == 0
        d = rtdm(a, b)
        assert d == rtdm(b, a)
        assert 0 <= d <= a.size + b.size - 1


def test_rtdm_infinite_epsilon_default():
    assert math.isinf(CostModel.unit().epsilon)


def test_deep_trees_do_not_recurse():
    deep = SimTree("x")
    for _ in range(5000):
        deep = SimTree("d", (deep,))
    other = SimTree("d", (SimTree("d", (SimTree("y"),)),))
    assert simple_tree_matching(deep, other) == 2
    assert rtdm(deep, deep) == 0
