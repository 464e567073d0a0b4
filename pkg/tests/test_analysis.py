"""Rate and failure-bound calculators plus the exhaustive sweep oracle.

Expected figures are recomputed here from first principles (independent
arithmetic, no shared helpers) before being compared.
"""

import math

import pytest

from gccodes.analysis import (
    DEFAULT_SCOPE_CAP,
    ScopeTooLargeError,
    bound_multi,
    bound_single,
    exhaustive_oracle,
    max_case_count,
    rate_single,
)
from gccodes.single_window import InvalidConfigError, gc_params

K_GRID = (128, 256, 512, 1024, 2048, 4096)

# published two-decimal rates for the c=3 and c=4 tables
RATES_C3 = ("0.82", "0.89", "0.93", "0.96", "0.98", "0.99")
RATES_C4 = ("0.78", "0.86", "0.92", "0.95", "0.97", "0.99")

# published two-significant-figure bounds for c=4
BOUNDS_C4 = ("1.4e-01", "1.3e-01", "1.1e-01", "1.0e-01", "9.1e-02", "8.3e-02")


def sig2_half_up(x):
    """Two significant figures, ties away from zero, as the tables round."""
    if x == 0:
        return "0.0e+00"
    e = math.floor(math.log10(abs(x)))
    scaled = x / 10 ** (e - 1)
    r = math.floor(scaled + 0.5)
    if r >= 100:
        r //= 10
        e += 1
    return f"{r / 10:.1f}e{e:+03d}"


def test_sig2_helper():
    assert sig2_half_up(0.125) == "1.3e-01"
    assert sig2_half_up(0.1) == "1.0e-01"
    assert sig2_half_up(0.0833) == "8.3e-02"
    assert sig2_half_up(0.096) == "9.6e-02"


def test_rate_single_golden():
    assert rate_single(128, 7, 3) == (157, 128 / 157)
    n, r = rate_single(4096, 12, 4)
    assert n == 4157 and f"{r:.2f}" == "0.99"
    assert rate_single(16, 4, 3)[0] == 33


@pytest.mark.parametrize("c,table", [(3, RATES_C3), (4, RATES_C4)])
def test_rate_tables(c, table):
    for k, want in zip(K_GRID, table):
        w = (k - 1).bit_length()
        assert f"{bound_single(k, w, c).rate:.2f}" == want, k


def test_bound_single_formula_and_table():
    for k, want in zip(K_GRID, BOUNDS_C4):
        w = (k - 1).bit_length()
        rep = bound_single(k, w, 4)
        assert sig2_half_up(rep.failure_bound) == want, k
        # independent recompute of the pre-clamp expression
        assert rep.failure_bound == pytest.approx((k / w) * 2.0 ** (-w))
        assert rep.redundancy_bits == 4 * w + w + 1
        assert rep.rate == k / (k + rep.redundancy_bits)


def test_bound_single_c3_trivial():
    for k in K_GRID:
        w = (k - 1).bit_length()
        assert bound_single(k, w, 3).failure_bound == 1.0


def test_bound_single_regimes():
    assert bound_single(1024, 4, 4).regime == "small-window"
    assert bound_single(1024, 10, 4).regime == "large-window"
    assert bound_single(1024, 12, 4).regime == "large-window"


def test_bound_monotone_in_c_and_k():
    for k in K_GRID:
        w = (k - 1).bit_length()
        vals = [bound_single(k, w, c).failure_bound for c in range(3, 9)]
        assert vals == sorted(vals, reverse=True)
    along_k = [bound_single(k, (k - 1).bit_length(), 4).failure_bound
               for k in K_GRID]
    assert along_k == sorted(along_k, reverse=True)


def test_max_case_count_recompute():
    # k=64, w=4, z=2: 11 blocks, C(9,2)=36 placements; the richest split
    # of missing bits between two windows capped at 4 has 5 variants
    assert max_case_count(64, 4, 7, 2) == 36 * 5
    # z=1 reduces to the m-1 adjacent pairs
    assert max_case_count(16, 4, 3, 1) == 3


def test_bound_multi_values():
    rep7 = bound_multi(64, 4, 7, 2)
    assert rep7.failure_bound == 1.0          # 180/64 clamps
    rep8 = bound_multi(64, 4, 8, 2)
    assert rep8.failure_bound == pytest.approx(180 / 4096)
    assert rep8.redundancy_bits == 8 * 6 * 9
    assert rep8.windows == 2
    assert bound_multi(64, 4, 6, 2).failure_bound == 1.0   # c = 3z


def test_bound_multi_z1_shape():
    # same exponent as the single-window bound, case count in place of k/ell
    rep = bound_multi(1024, 10, 5, 1)
    m = -(-1024 // 10)
    assert rep.failure_bound == pytest.approx((m - 1) * 2.0 ** (-10 * 2))
    single = bound_single(1024, 10, 5)
    assert rep.failure_bound / single.failure_bound == pytest.approx(
        (m - 1) / (1024 / 10))


def test_bound_multi_validation():
    with pytest.raises(InvalidConfigError):
        bound_multi(64, 4, 4, 2)
    with pytest.raises(InvalidConfigError):
        bound_multi(64, 4, 7, 0)


def test_oracle_single_guess_never_fails():
    p = gc_params(8, 4, 3)
    assert p.m == 2
    rep = exhaustive_oracle(p, "10110100")
    assert rep.trials == 352 and rep.failures == 0


def test_oracle_worked_example_full_scope():
    p = gc_params(16, 4, 3)
    rep = exhaustive_oracle(p, "1100101001111000")
    assert rep.trials == 480
    assert rep.failures == 0
    assert rep.failure_patterns == ()


def test_oracle_c5_full_scope():
    p = gc_params(16, 4, 5)
    rep = exhaustive_oracle(p, "1100101001111000")
    assert rep.trials == 608 and rep.failures == 0


def test_oracle_scope_cap():
    p = gc_params(16, 4, 3)
    with pytest.raises(ScopeTooLargeError):
        exhaustive_oracle(p, "1100101001111000", cap=100)
    assert DEFAULT_SCOPE_CAP >= 10 ** 6
