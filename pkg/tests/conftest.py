import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from chernfm.lattice import ChernCharacter, Surface, Threefold  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

small = st.integers(-6, 6)
degrees = st.integers(1, 5)
genera = st.integers(0, 4)


@st.composite
def threefold_chars(draw, d=None, rank=None):
    geo = Threefold(draw(degrees) if d is None else d)
    entries = [draw(small) for _ in range(6)]
    if rank is not None:
        entries[0] = rank
    return ChernCharacter.from_entries(geo, *entries)


@st.composite
def surface_chars(draw, g=None):
    geo = Surface(draw(genera) if g is None else g)
    return ChernCharacter.from_entries(geo, *[draw(small) for _ in range(4)])


positive_rationals = st.fractions(min_value=0, max_value=20, max_denominator=12).filter(lambda q: q > 0)
