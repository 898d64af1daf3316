"""Bounded-budget vertex-cover search."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import alphabound as ab
from helpers import graphs, petersen


def test_basic_outcomes():
    c5 = ab.cycle_graph(5)
    out = ab.vertex_cover_decide(c5, 3)
    assert out.covered and len(out.cover) <= 3 and c5.is_vertex_cover(out.cover)
    out = ab.vertex_cover_decide(c5, 2)
    assert not out.covered and out.cover is None
    assert ab.vertex_cover_decide(c5, -1) == ab.VcOutcome(False, None, 0)
    out = ab.vertex_cover_decide(ab.empty_graph(4), 0)
    assert out.covered and out.cover == ()


def test_deterministic():
    g = petersen()
    assert ab.vertex_cover_decide(g, 6) == ab.vertex_cover_decide(g, 6)


def test_cycles_need_half_the_vertices():
    for n in range(3, 12):
        need = (n + 1) // 2
        g = ab.cycle_graph(n)
        assert ab.vertex_cover_decide(g, need).covered
        assert not ab.vertex_cover_decide(g, need - 1).covered


def test_node_budget_enforced():
    with pytest.raises(ab.ResourceLimitError):
        ab.vertex_cover_decide(ab.cycle_graph(9), 4, node_budget=1)


@given(graphs(max_n=8), st.integers(min_value=-1, max_value=9))
def test_agrees_with_exact_oracle(g, t):
    vc_size = ab.exact_min_vc(g)[0]
    out = ab.vertex_cover_decide(g, t)
    assert out.covered == (t >= 0 and vc_size <= t)
    if out.covered:
        assert len(out.cover) <= t
        assert g.is_vertex_cover(out.cover)
    if t >= 0:
        assert out.nodes_explored <= 2 ** (t + 1)
    else:
        assert out.nodes_explored == 0


def test_max_independent_set_at_least():
    pet = petersen()
    got = ab.max_independent_set_at_least(pet, 4)
    assert got is not None and len(got) >= 4 and pet.is_independent_set(got)
    assert ab.max_independent_set_at_least(pet, 5) is None
    trivial = ab.max_independent_set_at_least(pet, 0)
    assert trivial is not None and pet.is_independent_set(trivial)
    with pytest.raises(ValueError):
        ab.max_independent_set_at_least(pet, -1)
