from hypothesis import strategies as st

from antimagic.graph_core import Caterpillar, parse_caterpillar


@st.composite
def caterpillars(draw, max_spine: int = 8, max_leaves_per_vertex: int = 4) -> Caterpillar:
    s = draw(st.integers(1, max_spine))
    counts = [draw(st.integers(0, max_leaves_per_vertex)) for _ in range(s)]
    if s == 1:
        counts[0] = max(2, counts[0])
    else:
        counts[0] = max(1, counts[0])
        counts[-1] = max(1, counts[-1])
    return parse_caterpillar(counts)
