"""Single-window codec, pinned to the worked 16-bit example wherever the
expected value is known in advance."""

import random

import pytest

from gccodes.channel import DeletionPattern, Window, delete_localized, sample_pattern
from gccodes.gf2e import bits_to_symbols
from gccodes.single_window import (
    FAILURE,
    INVALID_INPUT,
    SUCCESS,
    InvalidConfigError,
    TooLongError,
    TooManyDeletionsError,
    decode,
    detect_affected_region,
    encode,
    evaluate_guess,
    gc_params,
    is_subsequence,
    try_guess,
)

U = "1100101001111000"
CODEWORD = "110010100111100000001100110000001"
RECEIVED = "110010011100000001100110000001"      # bits 7, 9, 10 deleted

PV = gc_params(16, 4, 3, kind="vandermonde")


def test_dims_golden():
    assert (PV.ell, PV.m, PV.last_block_len, PV.n) == (4, 4, 4, 33)
    p = gc_params(128, 7, 3)
    assert (p.ell, p.m, p.last_block_len, p.n) == (7, 19, 2, 157)
    p = gc_params(1024, 5, 4)
    assert (p.ell, p.m, p.last_block_len, p.n) == (10, 103, 4, 1070)


def test_dims_invalid():
    with pytest.raises(InvalidConfigError):
        gc_params(16, 4, 2)          # not enough parities
    with pytest.raises(InvalidConfigError):
        gc_params(16, 16, 3)         # window as large as the message
    with pytest.raises(InvalidConfigError):
        gc_params(4, 1, 3)           # 2 + 3 symbols exceed GF(4)
    with pytest.raises(InvalidConfigError):
        gc_params(16, 0, 3)


def test_encode_golden():
    assert encode(U, PV) == CODEWORD
    # systematic prefix, then w zeros and a one, then 12 parity bits
    assert CODEWORD[:16] == U
    assert CODEWORD[16:21] == "00001"


def test_encode_validation():
    with pytest.raises(ValueError):
        encode(U + "0", PV)
    with pytest.raises(ValueError):
        encode(U[:-1] + "x", PV)


def test_detect_region():
    rep = detect_affected_region(RECEIVED, PV)
    assert rep.systematic_affected and rep.delta == 3
    rep = detect_affected_region(CODEWORD, PV)
    assert not rep.systematic_affected and rep.delta == 0
    # deletions confined to the parity suffix leave the marker bit a zero
    rep = detect_affected_region(CODEWORD[:25] + CODEWORD[27:], PV)
    assert not rep.systematic_affected and rep.delta == 2


def test_detect_region_length_contract():
    with pytest.raises(TooManyDeletionsError):
        detect_affected_region(CODEWORD[: 33 - 5], PV)
    with pytest.raises(TooLongError):
        detect_affected_region(CODEWORD + "0", PV)


def strip_received(y, p):
    delta = p.n - len(y)
    s = y[: len(y) - p.c * p.ell - (p.w + 1)]
    parities = bits_to_symbols(y[len(y) - p.c * p.ell:], p.ctx)
    return s, parities, delta


def test_three_guesses_verdicts():
    s, parities, _ = strip_received(RECEIVED, PV)
    assert s == "1100100111000"

    g1 = evaluate_guess(s, 1, parities, PV)
    assert g1.decoded_pair == (4, 6)             # alpha^2, alpha^5
    assert not g1.parities_ok and not g1.supersequence_ok
    assert g1.candidate is None

    g2 = evaluate_guess(s, 2, parities, PV)
    assert g2.decoded_pair == (10, 7)            # alpha^9, alpha^10
    assert g2.parities_ok and g2.supersequence_ok and g2.padding_ok
    assert g2.candidate == U

    g3 = evaluate_guess(s, 3, parities, PV)
    assert g3.decoded_pair == (12, 0)            # alpha^6, zero
    assert not g3.parities_ok and g3.supersequence_ok
    assert g3.candidate is None


def test_try_guess_matches_evaluate():
    s, parities, _ = strip_received(RECEIVED, PV)
    assert try_guess(s, 1, parities, PV) is None
    assert try_guess(s, 2, parities, PV) == U
    assert try_guess(s, 3, parities, PV) is None


def test_evaluate_guess_validation():
    s, parities, _ = strip_received(RECEIVED, PV)
    with pytest.raises(ValueError):
        evaluate_guess(s, 0, parities, PV)
    with pytest.raises(ValueError):
        evaluate_guess(s, 4, parities, PV)
    with pytest.raises(ValueError):
        evaluate_guess(s[:8], 1, parities, PV)


def test_decode_golden():
    res = decode(RECEIVED, PV)
    assert res.status == SUCCESS
    assert res.ok
    assert res.message == U
    assert res.guess == 2


def test_decode_no_deletions():
    res = decode(CODEWORD, PV)
    assert res.status == SUCCESS and res.message == U and res.guess is None


def test_decode_length_contract():
    assert decode(CODEWORD[: 33 - 5], PV).status == INVALID_INPUT
    assert decode(CODEWORD + "0", PV).status == INVALID_INPUT


def test_all_single_deletions_recover():
    for i in range(33):
        y = CODEWORD[:i] + CODEWORD[i + 1:]
        res = decode(y, PV)
        assert res.status == SUCCESS and res.message == U, i


def test_parity_region_deletions_take_marker_path():
    # windows entirely behind the buffer leave the systematic image intact
    for start in (22, 26, 30):
        pat = DeletionPattern((Window(start, (0, 1, 2, 3)),))
        y = delete_localized(CODEWORD, pat, w=4, z=1)
        res = decode(y, PV)
        assert res.status == SUCCESS and res.message == U and res.guess is None


def test_buffer_straddle_never_wrong():
    # sweep every window that touches the buffer and every offset subset
    from itertools import combinations
    p = PV
    for start in range(p.k - p.w + 1, p.k + p.w + 2):
        if start + p.w - 1 > p.n:
            break
        for d in range(1, p.w + 1):
            for offs in combinations(range(p.w), d):
                pat = DeletionPattern((Window(start, offs),))
                y = delete_localized(CODEWORD, pat, w=p.w, z=1)
                res = decode(y, p)
                assert res.status in (SUCCESS, FAILURE)
                if res.status == SUCCESS:
                    assert res.message == U
                touched_systematic = any(start + o <= p.k for o in offs)
                if not touched_systematic:
                    assert res.status == SUCCESS


def test_randomized_never_wrong():
    p = gc_params(32, 5, 3)
    rng = random.Random(99)
    statuses = set()
    for _ in range(2000):
        u = format(rng.getrandbits(32), "032b")
        x = encode(u, p)
        pat = sample_pattern(p, rng.randrange(p.w + 1), rng)
        y = delete_localized(x, pat, w=p.w, z=1)
        res = decode(y, p)
        statuses.add(res.status)
        assert res.status != INVALID_INPUT
        if res.status == SUCCESS:
            assert res.message == u
    assert SUCCESS in statuses


def test_failure_reports_all_candidates():
    p = gc_params(16, 4, 3)
    u = "0011111001110000"
    x = encode(u, p)
    assert x == "001111100111000000001101001011110"
    y = delete_localized(x, DeletionPattern((Window(12, (0, 1, 2, 3)),)), w=4, z=1)
    res = decode(y, p)
    assert res.status == FAILURE
    assert res.message is None
    assert set(res.candidates) == {"1100101011100110", "0011111001110000"}
    assert u in res.candidates


def test_is_subsequence_against_dp_oracle():
    def dp(sub, sup):
        i = 0
        for ch in sup:
            if i < len(sub) and sub[i] == ch:
                i += 1
        return i == len(sub)

    rng = random.Random(3)
    for _ in range(500):
        sup = "".join(rng.choice("01") for _ in range(rng.randrange(12)))
        sub = "".join(rng.choice("01") for _ in range(rng.randrange(8)))
        assert is_subsequence(sub, sup) == dp(sub, sup)
    assert is_subsequence("", "") and is_subsequence("", "0")
    assert not is_subsequence("1", "")
