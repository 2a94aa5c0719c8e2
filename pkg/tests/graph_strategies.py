from __future__ import absolute_import

from hypothesis import strategies as st

from steklov.containers.graph import WeightedBoundaryGraph

weights = st.floats(min_value=0.5, max_value=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def boundary_graphs(draw, min_vertices=2, max_vertices=8, weighted=True):
    """Connected weighted graphs with a nonempty boundary: a random
    recursive tree plus a few extra edges."""
    n = draw(st.integers(min_vertices, max_vertices))
    edges = set()
    for k in range(1, n):
        edges.add((draw(st.integers(0, k - 1)), k))
    extra = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n)
    )
    for (u, v) in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    if not any(mask):
        mask[0] = True
    name = "x%d".__mod__
    draw_weight = (lambda: draw(weights)) if weighted else (lambda: 1.0)
    return WeightedBoundaryGraph(
        [name(k) for k in range(n)],
        [(name(u), name(v), draw_weight()) for (u, v) in sorted(edges)],
        dict((name(k), draw_weight()) for k in range(n)),
        [name(k) for k in range(n) if mask[k]],
    )


def vertex_values(n):
    return st.lists(
        st.floats(min_value=-1.0, max_value=1.0, allow_nan=False), min_size=n, max_size=n
    )
