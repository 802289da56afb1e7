"""
Tests for DOT output
"""

import os

from src.efficiency.dominance import DominanceDigraph, dominance_digraph
from src.formats.dot import emit_dot, save_dot

IDENTICAL_ORDER_DOT = """digraph dominance {
  "abc" [peripheries=2];
  "acb";
  "bac";
  "bca";
  "cab";
  "cba" [peripheries=2];
  "abc" -> "acb";
  "abc" -> "bac";
  "cba" -> "bca";
  "cba" -> "cab";
}
"""


def test_identical_order_dot(identical_order_profile):
    """Sorted nodes and edges; efficient nodes drawn with a double border."""
    assert emit_dot(dominance_digraph(identical_order_profile)) == IDENTICAL_ORDER_DOT


def test_empty_graph():
    assert emit_dot(DominanceDigraph(3, (), ())) == "digraph dominance {\n}\n"


def test_dot_is_stable(five_agent_profile):
    g = dominance_digraph(five_agent_profile)
    text = emit_dot(g)
    assert text == emit_dot(dominance_digraph(five_agent_profile))
    assert text.count("->") == len(g.edges)
    assert "peripheries" not in text


def test_save_dot(tmp_path, identical_order_profile):
    path = os.path.join(tmp_path, "graph.dot")
    save_dot(dominance_digraph(identical_order_profile), path)
    with open(path, 'r', encoding='utf-8') as f:
        assert f.read() == IDENTICAL_ORDER_DOT
