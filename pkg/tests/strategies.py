from hypothesis import strategies as st

from synchq.qpoly import QPoly, ZQLaurent

coeffs = st.integers(-6, 6)
qpolys = st.dictionaries(st.integers(0, 8), coeffs, max_size=5).map(QPoly)
zqlaurents = st.dictionaries(st.integers(-3, 3), qpolys, max_size=4).map(ZQLaurent)
