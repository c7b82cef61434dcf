from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qsymlab.compositions import Composition

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def compositions(max_size: int = 5, max_len: int = 4):
    """Compositions of size at most ``max_size``."""
    return (
        st.lists(st.integers(1, max_size), max_size=max_len)
        .filter(lambda ps: sum(ps) <= max_size)
        .map(Composition)
    )
