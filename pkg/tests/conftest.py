import random
from fractions import Fraction

from hypothesis import strategies as st

from reccf import PowerSum

# acceptance criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {key}: {detail}")


roots = st.builds(Fraction, st.integers(1, 50), st.integers(1, 4))
int_roots = st.integers(1, 50).map(Fraction)
coeffs = st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**6))


def power_sums(root_strategy=roots, max_terms=6, min_terms=0):
    return st.lists(st.tuples(root_strategy, coeffs), min_size=min_terms, max_size=max_terms).map(PowerSum)


def random_power_sum(rng: random.Random, max_terms=6, max_root=50, height=10**6, integral=False, nonzero=False):
    """Plain-``random`` generator used where hypothesis shrinking is not wanted."""
    while True:
        k = rng.randint(1 if nonzero else 0, max_terms)
        terms = []
        for _ in range(k):
            if integral:
                root = Fraction(rng.randint(1, max_root))
            else:
                den = rng.randint(1, 6)
                root = Fraction(rng.randint(1, max_root * den), den)
            c = Fraction(rng.randint(-height, height), rng.randint(1, height))
            terms.append((root, c))
        alpha = PowerSum(terms)
        if alpha or not nonzero:
            return alpha
