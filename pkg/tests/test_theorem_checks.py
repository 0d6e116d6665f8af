"""
Tests for the Minkowski, Rees and gamma checks.
"""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core import ExceptionalConfig, QDivisor
from app.errors import DimensionMismatch, NotDominated, NotEffective, SameIndex, ZeroDivisor
from app.theorem_checks import (
    Equality,
    Strict,
    classify,
    gamma,
    minkowski_report,
    minkowski_verdicts,
    prime_distinctness,
    rees_check,
)
from app.zariski import ceil_scale, decompose
from tests.strategies import configs_with_divisors, divisor, effective_divisors


def proportional(d1: QDivisor, d2: QDivisor) -> bool:
    n = len(d1)
    return all(d1[i] * d2[j] == d1[j] * d2[i] for i in range(n) for j in range(n))


class TestMinkowski:
    """Tests for minkowski_report and the equality classification."""

    def test_chain_strict(self, chain_config):
        """Test a strict case on a chain."""
        report = minkowski_report(chain_config, divisor(1, 0), divisor(0, 1))
        assert (report.e0, report.e1, report.e2) == (1, Fraction(1, 2), Fraction(1, 2))
        assert report.all_hold
        assert isinstance(report.equality_case, Strict)
        assert report.product_multiplicity == Fraction(5, 2)

    def test_scaled_equality(self, a2_config):
        """Test equality for a divisor and its multiple."""
        case = classify(a2_config, divisor(1, 0), divisor(3, 0))
        assert case == Equality(a=3, b=1)

    def test_a2_strict(self, a2_config):
        """Test a strict case on A2."""
        report = minkowski_report(a2_config, divisor(1, 0), divisor(0, 1))
        assert report.to_dict()["e"] == ["3/2", "3/4", "3/2"]
        assert report.equality_case.kind == "strict"

    def test_equality_from_same_delta(self, chain_config):
        """Test equality for different divisors with the same Delta."""
        # E1 and E1 + E2 share Delta = E1 + E2
        case = classify(chain_config, divisor(1, 0), divisor(1, 1))
        assert case == Equality(a=1, b=1)

    def test_equality_ceilings_on_toric_chain(self):
        """Test that equality gives equal ceilings on a toric chain."""
        config = ExceptionalConfig.build([[-3, 1, 0], [1, -1, 1], [0, 1, -2]])
        d1, d2 = divisor(0, 1, 0), divisor(0, "3/2", 0)
        case = classify(config, d1, d2)
        assert case == Equality(a=3, b=2)
        left, right = decompose(config, d1 * 3), decompose(config, d2 * 2)
        for n in range(1, 30):
            assert ceil_scale(left, n) == ceil_scale(right, n)
        assert classify(config, d1 * 5, d2 * 5) == case

    def test_zero_divisor(self, chain_config):
        """Test rejection of the zero divisor."""
        with pytest.raises(ZeroDivisor):
            minkowski_report(chain_config, QDivisor.zero(2), divisor(1, 0))

    def test_not_effective(self, chain_config):
        """Test rejection of a non-effective divisor."""
        with pytest.raises(NotEffective):
            minkowski_report(chain_config, divisor(1, -1), divisor(1, 0))

    def test_verdict_count(self):
        """Test the list of checked inequalities."""
        verdicts = minkowski_verdicts(Fraction(1), Fraction(1, 2), Fraction(1, 2))
        assert [v.item for v in verdicts] == ["1", "2", "2", "2", "3", "3", "3", "4"]
        assert all(v.holds for v in verdicts)

    def test_report_dict(self, chain_config):
        """Test the Minkowski report."""
        data = minkowski_report(chain_config, divisor(1, 0), divisor(0, 1)).to_dict()
        assert data["e"] == ["1", "1/2", "1/2"]
        assert data["equality_case"] == "strict"
        assert data["weighted"] is False

    def test_weighted(self, two_branch_config):
        """Test the weighted classification."""
        report = minkowski_report(
            two_branch_config, divisor(1, 1), divisor(2, 2), weighted=True
        )
        assert report.e0 == 3
        assert report.equality_case == Equality(a=2, b=1)


class TestPrimeDistinctness:
    """Distinct prime curves never reach Minkowski equality."""

    def test_two_curve_graphs(self, chain_config, a2_config):
        """Test distinct primes on two-curve graphs."""
        assert isinstance(prime_distinctness(chain_config, 0, 1).equality_case, Strict)
        assert isinstance(prime_distinctness(a2_config, 0, 1).equality_case, Strict)

    def test_chain_ends(self):
        """Test the two ends of an A3 chain."""
        config = ExceptionalConfig.build([[-2, 1, 0], [1, -2, 1], [0, 1, -2]])
        assert isinstance(prime_distinctness(config, 0, 2).equality_case, Strict)

    def test_same_index(self, a2_config):
        """Test rejection of equal indices."""
        with pytest.raises(SameIndex):
            prime_distinctness(a2_config, 1, 1)

    def test_out_of_range(self, a2_config):
        """Test rejection of an index outside the config."""
        with pytest.raises(DimensionMismatch):
            prime_distinctness(a2_config, 0, 5)


class TestRees:
    """Tests for rees_check."""

    def test_equal_volumes(self, chain_config):
        """Test equal volumes with equal Delta."""
        report = rees_check(chain_config, divisor(1, 0), divisor(1, 1))
        assert report.vol1 == report.vol2 == 1
        assert report.delta1 == report.delta2 == divisor(1, 1)
        assert len(report.certificates) == 50
        assert report.certificates_agree

    def test_strict_volumes(self, a2_config):
        """Test strictly smaller volume."""
        report = rees_check(a2_config, divisor(1, 0), divisor(1, 1))
        assert report.vol1 == Fraction(3, 2)
        assert report.vol2 == 2
        assert not report.delta_equal
        assert not report.volumes_equal

    def test_identical(self, a2_config):
        """Test a divisor against itself."""
        d = divisor(2, "1/3")
        report = rees_check(a2_config, d, d, depth=5)
        assert report.volumes_equal and report.delta_equal and report.certificates_agree

    def test_not_dominated(self, a2_config):
        """Test rejection of a pair that is not ordered."""
        with pytest.raises(NotDominated) as info:
            rees_check(a2_config, divisor(1, 0), divisor(0, 1))
        assert info.value.indices == (0,)

    def test_to_dict(self, chain_config):
        """Test the Rees report."""
        data = rees_check(chain_config, divisor(1, 0), divisor(1, 1), depth=3).to_dict()
        assert data["certificates"][1] == {"n": 2, "ceil1": ["2", "2"], "ceil2": ["2", "2"]}


class TestGamma:
    """Tests for gamma candidates."""

    def test_examples(self, chain_config, a2_config):
        """Test gamma candidates on small configs."""
        assert gamma(chain_config, divisor(1, 0)).values == (1, 1)
        assert gamma(a2_config, divisor(1, 0)).values == (1, Fraction(1, 2))

    def test_antinef_is_fixed(self, chain_config):
        """Test that an anti-nef divisor is its own candidate."""
        assert gamma(chain_config, divisor(2, 2)).values == (2, 2)

    def test_experimental_status(self, a2_config):
        """Test the experimental status flag."""
        data = gamma(a2_config, divisor(1, 0)).to_dict()
        assert data["status"] == "experimental"
        assert data["gamma"] == ["1", "1/2"]


@pytest.mark.property
class TestTheoremProperties:
    """Property suites on random validated configs."""

    @given(configs_with_divisors(count=2, nonzero=True))
    @settings(max_examples=500)
    def test_minkowski_suite(self, case):
        """Test the inequalities and equality classification on random pairs."""
        config, d1, d2 = case
        report = minkowski_report(config, d1, d2)
        assert report.all_hold
        delta1 = decompose(config, d1).Delta
        delta2 = decompose(config, d2).Delta
        equal = report.e1 * report.e1 == report.e0 * report.e2
        assert equal == proportional(delta1, delta2)
        assert isinstance(report.equality_case, Equality) == equal
        if equal:
            a, b = report.equality_case.a, report.equality_case.b
            assert gcd(a, b) == 1
            assert delta1 * a == delta2 * b

    @given(
        configs_with_divisors(nonzero=True),
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5),
    )
    @settings(max_examples=200)
    def test_scaled_pairs_reach_equality(self, case, q):
        """Test that scaled pairs classify as equality."""
        config, d = case
        case_ = classify(config, d, d * q)
        assert case_ == Equality(a=q.numerator, b=q.denominator)

    @given(configs_with_divisors(), st.data())
    @settings(max_examples=300)
    def test_rees(self, case, data):
        """Test the Rees check on random ordered pairs."""
        config, d1 = case
        d2 = d1 + data.draw(effective_divisors(config.size))
        report = rees_check(config, d1, d2, depth=10)
        assert report.vol1 <= report.vol2
        assert report.volumes_equal == report.delta_equal

    @given(
        configs_with_divisors(count=2, nonzero=True),
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5),
    )
    @settings(max_examples=200)
    def test_classification_scale_invariant(self, case, c):
        """Test that scaling both divisors keeps the classification."""
        config, d1, d2 = case
        assert classify(config, d1 * c, d2 * c) == classify(config, d1, d2)

    @given(
        configs_with_divisors(count=2, nonzero=True),
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5),
    )
    @settings(max_examples=200)
    def test_equality_gives_equal_ceilings(self, case, q):
        """Test that equality gives equal ceilings of a*Delta1 and b*Delta2."""
        config, d1, d2 = case
        for other in (d2, d1 * q):
            verdict = classify(config, d1, other)
            if isinstance(verdict, Equality):
                left = decompose(config, d1 * verdict.a)
                right = decompose(config, other * verdict.b)
                for n in range(1, 21):
                    assert ceil_scale(left, n) == ceil_scale(right, n)
