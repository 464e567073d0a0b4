"""Redundancy, rate, failure-probability bounds, and exhaustive sweeps.

The failure bounds upper-bound the chance that guess-and-check decoding
ends with two or more surviving candidates (the decoder then refuses to
answer; it never answers wrongly). They clamp at 1 when the parameters
leave no spare checking budget.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .channel import DeletionPattern, Window, delete_localized
from .single_window import (
    FAILURE,
    SUCCESS,
    InvalidConfigError,
    decode,
    derive_dims,
    encode,
)


class ScopeTooLargeError(ValueError):
    pass


class MiscorrectionError(RuntimeError):
    """A decoder returned Success with the wrong message. Must never happen."""


DEFAULT_SCOPE_CAP = 10_000_000


@dataclass(frozen=True)
class BoundReport:
    redundancy_bits: int
    rate: float
    failure_bound: float
    regime: str          # "small-window" or "large-window"
    windows: int


def _regime(k, w):
    return "small-window" if w < (k - 1).bit_length() else "large-window"


def bound_single(k, w, c):
    """Report for the single-window code.

    failure_bound is min(1, (k/ell) * 2^-((c-3) ell)): of the m - 1
    guesses, each wrong one survives the two solving parities plus c - 2
    spare checks with probability about 2^-((c-3) ell) once the
    supersequence test is counted worth one block.
    """
    ell, m, last = derive_dims(k, w, c)
    redundancy = c * ell + w + 1
    rate = k / (k + redundancy)
    fb = min(1.0, (k / ell) * 2.0 ** (-(c - 3) * ell))
    return BoundReport(redundancy_bits=redundancy, rate=rate, failure_bound=fb,
                       regime=_regime(k, w), windows=1)


def rate_single(k, w, c):
    """Block length and rate of the single-window code: (n, k/n)."""
    ell, m, last = derive_dims(k, w, c)
    n = k + c * ell + w + 1
    return n, k / n


def _split_count(total, parts, cap):
    """Number of ways to write total as an ordered sum of `parts` ints in [0, cap]."""
    counts = [1] + [0] * total
    for _ in range(parts):
        nxt = [0] * (total + 1)
        for t in range(total + 1):
            if counts[t]:
                for d in range(min(cap, total - t) + 1):
                    nxt[t + d] += counts[t]
        counts = nxt
    return counts[total]


def max_case_count(k, w, c, z):
    """Exact worst-case number of decoder cases over all deletion counts."""
    ell, m, last = derive_dims(k, w, c)
    placements = comb(m - z, z)
    worst_splits = max(_split_count(d, z, w) for d in range(z * w + 1))
    return placements * worst_splits


def bound_multi(k, w, c, z):
    """Report for the multi-window code: t_max * 2^-(ell (c - 3z)) clamped
    at 1, where t_max is the exact case count maximized over the number of
    missing bits."""
    if z < 1:
        raise InvalidConfigError(f"z={z} must be at least 1")
    ell, m, last = derive_dims(k, w, c)
    if c < 2 * z + 1:
        raise InvalidConfigError(f"c={c} must be at least 2z + 1 = {2 * z + 1}")
    if m < 2 * z:
        raise InvalidConfigError(f"{m} blocks cannot host {z} disjoint block pairs")
    r = z * w + 1
    redundancy = c * ell * r
    rate = k / (k + redundancy)
    fb = min(1.0, max_case_count(k, w, c, z) * 2.0 ** (-ell * (c - 3 * z)))
    return BoundReport(redundancy_bits=redundancy, rate=rate, failure_bound=fb,
                       regime=_regime(k, w), windows=z)


@dataclass(frozen=True)
class OracleReport:
    trials: int
    failures: int
    failure_patterns: tuple


def exhaustive_oracle(p, u, window_starts=None, deltas=None, cap=DEFAULT_SCOPE_CAP):
    """Run encode -> delete -> decode over an exhaustive pattern scope.

    For each window start (default: every position where the window fits)
    and each deletion count in deltas (default 0..w), every subset of that
    size of the window's offsets is applied. Returns the failure tally;
    raises MiscorrectionError the moment any decode returns a wrong
    message, and ScopeTooLarge when the sweep would exceed cap decodes.
    """
    x = encode(u, p)
    if window_starts is None:
        window_starts = range(1, p.n - p.w + 2)
    window_starts = list(window_starts)
    deltas = list(range(p.w + 1)) if deltas is None else list(deltas)
    per_start = sum(comb(p.w, d) for d in deltas)
    total = per_start * len(window_starts)
    if total > cap:
        raise ScopeTooLargeError(f"{total} patterns exceed the cap {cap}")
    failures = 0
    failure_patterns = []
    trials = 0
    for start in window_starts:
        for d in deltas:
            for offsets in combinations(range(p.w), d):
                pat = DeletionPattern(windows=(Window(start=start, offsets=offsets),))
                y = delete_localized(x, pat, w=p.w, z=1)
                res = decode(y, p)
                trials += 1
                if res.status == SUCCESS:
                    if res.message != u:
                        raise MiscorrectionError(
                            f"wrong message for pattern {pat} (start={start}, offsets={offsets})"
                        )
                elif res.status == FAILURE:
                    failures += 1
                    failure_patterns.append(pat)
                else:
                    raise MiscorrectionError(
                        f"decoder rejected a channel-compliant pattern {pat}: {res.reason}"
                    )
    return OracleReport(trials=trials, failures=failures,
                        failure_patterns=tuple(failure_patterns))
