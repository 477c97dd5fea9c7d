from positroid.verify import verify_suite
from positroid.model import random_permutation
from positroid import Positroid


def test_golden_verifies(golden):
    report = verify_suite(golden)
    assert report.passed, [str(c) for c in report.checks if not c.passed]
    assert not report.warnings


def test_large_input_samples():
    P = Positroid(random_permutation(17, 3))
    report = verify_suite(P, seed=1)
    assert report.passed
    assert any("sampling" in w for w in report.warnings)
