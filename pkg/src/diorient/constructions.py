"""Extremal graph families with one edge too few to force a small oriented diameter.

Two generators:

* ``gnd``: a path spine of length d whose endpoints both join a clique on
  n-d-1 vertices, plus an apex vertex attached to the 2nd, 3rd and 4th spine
  vertices.  Size comb(n-d, 2) + n + 1; no orientation reaches diameter <= d.
* ``h``: a cycle on n-1 vertices plus the same apex gadget.  Size n + 2; no
  orientation reaches diameter <= n-2.  For n >= 7 this coincides with
  ``gnd`` at d = n-2.

Vertex numbering is fixed for reproducible output: spine vertices first,
then clique vertices, apex last.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import RangeError
from .graphs import UndirectedGraph

GND = "gnd"
H = "h"

FAMILIES = (GND, H)


@dataclass(frozen=True)
class ExtremalSpec:
    """Landmark labels for a generated extremal graph."""

    family: str
    n: int
    d: int
    spine: tuple  # path u_1..u_d (gnd) or cycle u_1..u_{n-1} (h)
    clique: tuple  # clique vertices (gnd only)
    apex: int  # the degree-3 vertex attached to spine[1..3]


def build_gnd(n: int, d: int):
    """Path-plus-clique extremal graph of order n for diameter bound d.

    Requires 5 <= d <= n-2.  The apex is adjacent to exactly the 2nd, 3rd
    and 4th spine vertices; both spine endpoints join every clique vertex.
    """
    if not 5 <= d <= n - 2:
        raise RangeError(f"gnd needs 5 <= d <= n-2, got n={n}, d={d}")
    spine = tuple(range(d))
    clique = tuple(range(d, n - 1))
    apex = n - 1
    edges = [(i, i + 1) for i in range(d - 1)]
    edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]]
    edges += [(spine[0], c) for c in clique]
    edges += [(spine[-1], c) for c in clique]
    edges += [(1, apex), (2, apex), (3, apex)]
    graph = UndirectedGraph(n, edges)
    return graph, ExtremalSpec(GND, n, d, spine, clique, apex)


def build_h(n: int):
    """Cycle-plus-apex extremal graph of order n for diameter bound n-2.

    Requires n >= 5.  Size is always n + 2.
    """
    if n < 5:
        raise RangeError(f"h needs n >= 5, got n={n}")
    ring = tuple(range(n - 1))
    apex = n - 1
    edges = [(i, i + 1) for i in range(n - 2)]
    edges.append((0, n - 2))
    edges += [(1, apex), (2, apex), (3, apex)]
    graph = UndirectedGraph(n, edges)
    return graph, ExtremalSpec(H, n, n - 2, ring, (), apex)


def expected_size(family: str, n: int, d: int) -> int:
    """Closed-form edge count of a family member."""
    if family == GND:
        if not 5 <= d <= n - 2:
            raise RangeError(f"gnd needs 5 <= d <= n-2, got n={n}, d={d}")
        return comb(n - d, 2) + n + 1
    if family == H:
        if n < 5 or d != n - 2:
            raise RangeError(f"h needs n >= 5 and d = n-2, got n={n}, d={d}")
        return n + 2
    raise RangeError(f"unknown family {family!r}")


def conjectured_threshold(n: int, d: int) -> int:
    """Conjectured least size forcing an orientation of diameter <= d.

    Defined for 2 <= d <= n-2: one more edge than the extremal families
    provide.  Proven exact at d = 2 and d = n-2.
    """
    if not 2 <= d <= n - 2:
        raise RangeError(f"threshold formula needs 2 <= d <= n-2, got n={n}, d={d}")
    return comb(n - d, 2) + n + 2
