"""
Intensity Efficiency - DOT Output
Graphviz rendering of a dominance digraph with stable ordering
"""

from typing import List

from src.core.logger import get_logger
from src.efficiency.dominance import DominanceDigraph


def emit_dot(g: DominanceDigraph) -> str:
    """
    Nodes and edges are sorted by allocation label so equal graphs give equal
    bytes; intensity-efficient nodes get a double periphery.
    """
    lines: List[str] = ["digraph dominance {"]
    efficient = set(g.efficient())
    for node in sorted(g.nodes, key=lambda x: x.label()):
        style = " [peripheries=2]" if node in efficient else ""
        lines.append(f'  "{node.label()}"{style};')
    for x, y in sorted(g.edges, key=lambda e: (e[0].label(), e[1].label())):
        lines.append(f'  "{x.label()}" -> "{y.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_dot(g: DominanceDigraph, path: str):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(emit_dot(g))
        get_logger().info(f"Wrote dominance graph to {path}")
    except OSError as e:
        get_logger().error(f"Failed to write DOT file {path}: {e}", exc_info=True)
        raise
