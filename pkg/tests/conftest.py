from hypothesis import strategies as st

from downset_codes.gf import FpVector
from downset_codes.poset import canonicalize

SMALL_PRIMES = [2, 3, 5, 7]
ODD_PRIMES = [3, 5, 7]


@st.composite
def fp_vectors(draw, p=None, m=None):
    p = draw(st.sampled_from(SMALL_PRIMES)) if p is None else p
    m = draw(st.integers(1, 5)) if m is None else m
    return FpVector(p, tuple(draw(st.lists(st.integers(0, p - 1), min_size=m, max_size=m))))


@st.composite
def downsets(draw, p, m, min_generators=1, max_generators=4):
    gens = draw(st.lists(fp_vectors(p, m), min_size=min_generators, max_size=max_generators))
    return canonicalize(gens)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") == "call" and "test_acceptance" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
