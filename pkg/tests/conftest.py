import sys
from pathlib import Path

from hypothesis import strategies as st

from qcong.qseries import QSeries
from qcong.ring import QQ, QUAD, ZZ, QuadInt

sys.path.insert(0, str(Path(__file__).parent))

small_ints = st.integers(-40, 40)

quad_elems = st.builds(QuadInt, small_ints, small_ints)

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)


def ring_and_elements(ring):
    if ring == ZZ:
        return small_ints
    if ring == QQ:
        return rationals
    if ring == QUAD:
        return quad_elems
    return st.integers(0, ring.modulus - 1)


def series_over(ring, min_T=1, max_T=10, offsets=st.integers(-8, 8)):
    return st.builds(
        lambda off, coeffs: QSeries(ring, off, coeffs),
        offsets,
        st.lists(ring_and_elements(ring), min_size=min_T, max_size=max_T),
    )


def mutate(series: QSeries, index: int, bump: int = 1) -> QSeries:
    """Rebuild a series with one coefficient changed (for self-tests)."""
    coeffs = list(series.coeffs)
    coeffs[index] = series.ring.add(coeffs[index], series.ring.from_int(bump))
    return QSeries(series.ring, series.offset24, coeffs)
