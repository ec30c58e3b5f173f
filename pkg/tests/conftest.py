from hypothesis import settings
from hypothesis import strategies as st

from secondsol.exactcore import DensePoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)


@st.composite
def polys(draw, max_degree=6):
    coeffs = draw(st.lists(rationals, min_size=0, max_size=max_degree + 1))
    return DensePoly(coeffs)



def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
