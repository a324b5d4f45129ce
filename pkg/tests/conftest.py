from itertools import combinations

from hypothesis import strategies as st

from homlab.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 6, loops: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if loops:
        pairs += [(v, v) for v in range(n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
