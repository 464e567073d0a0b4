"""Codec for binary messages hit by up to w deletions confined to one
window of w consecutive positions.

Layout of a codeword (n = k + c*ell + w + 1 bits):

    [ k message bits | w zeros, then a single one | c parity blocks of ell bits ]

The message is chunked into m = ceil(k / ell) field symbols (a short final
block keeps its bits in the high coefficient positions) and the parities
come from a systematic MDS layer over GF(2^ell). The buffer between data
and parities lets the decoder tell, with no chance of error, whether the
deletions landed before the buffer's one (message side) or after (buffer or
parity side):

  * received bit at position k + w - delta + 1 is 0: the message bits are
    intact and are simply read off the front;
  * that bit is 1: the parities are intact at the tail, and the decoder
    tries every adjacent block pair (i, i+1), solving the pair by erasure
    decoding from two parities and keeping the guess only when the spare
    parities, the zero padding of a short final block, and a supersequence
    test against the received bits all agree.

Distinct surviving candidates mean the decoder refuses to choose (Failure);
a single surviving candidate is provably the sent message when the channel
respected the window contract.
"""

from dataclasses import dataclass

from . import mds
from .gf2e import FieldContext, bits_to_symbols, symbols_to_bits


class InvalidConfigError(ValueError):
    pass


class TooManyDeletionsError(ValueError):
    pass


class TooLongError(ValueError):
    pass


SUCCESS = "success"
FAILURE = "failure"
INVALID_INPUT = "invalid-input"


@dataclass(frozen=True)
class CodeParams:
    k: int
    w: int
    c: int
    ell: int
    m: int
    last_block_len: int
    kind: str
    ctx: FieldContext
    gen: mds.Generator

    @property
    def n(self):
        return self.k + self.c * self.ell + self.w + 1


def derive_dims(k, w, c):
    """Shared parameter validation and the (ell, m, last_block_len) rule.

    ell = max(w, ceil(log2 k)) keeps every window inside at most two
    adjacent blocks while the parities stay a vanishing fraction of the
    codeword as k grows.
    """
    if k < 4:
        raise InvalidConfigError(f"k={k} must be at least 4")
    if not 1 <= w < k:
        raise InvalidConfigError(f"w={w} must satisfy 1 <= w < k")
    if c < 3:
        raise InvalidConfigError(f"c={c} must be at least 3")
    ell = max(w, (k - 1).bit_length())
    m = -(-k // ell)
    if m < 2:
        raise InvalidConfigError(f"k={k}, w={w} leave only {m} block")
    if m + c > (1 << ell):
        raise InvalidConfigError(
            f"m + c = {m + c} exceeds field size 2^{ell}; lower c or w"
        )
    last = k - (m - 1) * ell
    return ell, m, last


def gc_params(k, w, c, kind="cauchy"):
    ell, m, last = derive_dims(k, w, c)
    ctx = FieldContext(ell)
    gen = mds.make_generator(m, c, ctx, kind)
    return CodeParams(k=k, w=w, c=c, ell=ell, m=m, last_block_len=last,
                      kind=kind, ctx=ctx, gen=gen)


def encode(u, p):
    if len(u) != p.k:
        raise ValueError(f"message must be {p.k} bits, got {len(u)}")
    if set(u) - {"0", "1"}:
        raise ValueError("message must contain only '0' and '1'")
    parities = mds.encode_parities(bits_to_symbols(u, p.ctx), p.gen)
    return u + "0" * p.w + "1" + symbols_to_bits(parities, p.ctx)


@dataclass(frozen=True)
class RegionReport:
    systematic_affected: bool
    delta: int


def detect_affected_region(y, p):
    """Which side of the buffer lost bits, decided by one received bit.

    With delta = n - |y| deletions all confined to one w-window, position
    k + w - delta + 1 of y (1-indexed) reads 1 exactly when every deletion
    happened left of the buffer's one, i.e. the message bits may be
    damaged but the parity tail is intact. It reads 0 exactly when the
    message bits are untouched.
    """
    if len(y) > p.n:
        raise TooLongError(f"received {len(y)} bits but the code length is {p.n}")
    if len(y) < p.n - p.w:
        raise TooManyDeletionsError(
            f"received {len(y)} bits; at most {p.w} deletions are correctable"
        )
    delta = p.n - len(y)
    if delta == 0:
        return RegionReport(False, 0)
    return RegionReport(y[p.k + p.w - delta] == "1", delta)


def is_subsequence(sub, sup):
    """True iff sub can be obtained from sup by deleting characters."""
    it = iter(sup)
    return all(ch in it for ch in sub)


@dataclass(frozen=True)
class DecodeResult:
    status: str
    message: str | None = None
    # Winning guess: the block-pair index for the guess path, None for the
    # parity path. decode_multi stores its (pairs, deltas) case here.
    guess: object = None
    candidates: tuple = ()
    reason: str | None = None

    @property
    def ok(self):
        return self.status == SUCCESS


@dataclass(frozen=True)
class GuessEval:
    """Full verdict for one guess, kept for inspection and tests."""
    guess: int
    decoded_pair: tuple
    erased_region: str
    decoded_bits: str
    padding_ok: bool
    parities_ok: bool
    supersequence_ok: bool
    candidate: str | None


class _GuessContext:
    """Per-received-word scratch state shared across all guesses.

    Chunking the prefix once left-aligned and the suffix once right-aligned,
    plus running parity partial sums from both ends, makes each guess cost
    O(c) field operations instead of O(m * c).
    """

    def __init__(self, s, parities, p):
        self.s = s
        self.parities = parities
        self.p = p
        ell, m, c = p.ell, p.m, p.c
        rows = p.gen.rows
        mul = p.ctx.mul
        zero = (0,) * c

        # left[i]: parity contributions of blocks 1..i read at their nominal
        # offsets (valid while those blocks are undamaged, i.e. i < guess).
        left = [zero]
        for j in range(m - 2):
            v = int(s[j * ell:(j + 1) * ell], 2)
            row = rows[j]
            left.append(tuple(left[-1][r] ^ mul(v, row[r]) for r in range(c)))
        self.left = left

        # right[j]: contributions of blocks j..m read right-aligned against
        # the end of s (valid when the deletions happened before block j).
        last = p.last_block_len
        right = {m + 2: zero, m + 1: zero}
        end = len(s)
        for j in range(m, 2, -1):
            blen = last if j == m else ell
            start = end - (m - j) * ell - last
            v = int(s[start:start + blen], 2)
            if j == m:
                v <<= ell - last
            row = rows[j - 1]
            right[j] = tuple(right[j + 1][r] ^ mul(v, row[r]) for r in range(c))
        self.right = right

    def solve_pair(self, i):
        """Erasure-decode blocks (i, i+1) from parities 1 and 2, assuming
        every other block is intact. Returns (Ui, Uj, syndromes)."""
        p = self.p
        mul = p.ctx.mul
        rows = p.gen.rows
        lp = self.left[i - 1]
        rp = self.right[i + 2]
        syn = [pr ^ lp[r] ^ rp[r] for r, pr in enumerate(self.parities)]
        ri, rj = rows[i - 1], rows[i]
        det = mul(ri[0], rj[1]) ^ mul(ri[1], rj[0])
        if det == 0:
            raise mds.SingularSystemError(
                f"pair ({i}, {i + 1}) is not erasure-decodable with this generator"
            )
        inv_det = p.ctx.inv(det)
        ui = mul(mul(syn[0], rj[1]) ^ mul(syn[1], rj[0]), inv_det)
        uj = mul(mul(ri[0], syn[1]) ^ mul(ri[1], syn[0]), inv_det)
        return ui, uj, syn

    def pair_len(self, i):
        p = self.p
        return p.ell + (p.last_block_len if i + 1 == p.m else p.ell)

    def region(self, i):
        """Received bits the guess treats as the damaged pair, plus the
        nominal bit length of the intact blocks i+2..m behind them."""
        p = self.p
        tail = (p.m - i - 2) * p.ell + p.last_block_len if i + 1 < p.m else 0
        return self.s[(i - 1) * p.ell: len(self.s) - tail], tail

    def candidate(self, i):
        """Fast path: candidate message for guess i, or None. Checks run
        cheapest first and stop at the first failure."""
        p = self.p
        mul = p.ctx.mul
        rows = p.gen.rows
        ui, uj, syn = self.solve_pair(i)
        if i + 1 == p.m and uj & ((1 << (p.ell - p.last_block_len)) - 1):
            return None
        ri, rj = rows[i - 1], rows[i]
        for r in range(2, p.c):
            if mul(ri[r], ui) ^ mul(rj[r], uj) != syn[r]:
                return None
        e, tail = self.region(i)
        width = f"0{p.ell}b"
        dec = (format(ui, width) + format(uj, width))[:self.pair_len(i)]
        if not is_subsequence(e, dec):
            return None
        return self.s[:(i - 1) * p.ell] + dec + (self.s[len(self.s) - tail:] if tail else "")

    def evaluate(self, i):
        """Slow path: every check is run and reported, nothing short-circuits."""
        p = self.p
        mul = p.ctx.mul
        rows = p.gen.rows
        ui, uj, syn = self.solve_pair(i)
        padding_ok = not (i + 1 == p.m and uj & ((1 << (p.ell - p.last_block_len)) - 1))
        ri, rj = rows[i - 1], rows[i]
        parities_ok = all(
            mul(ri[r], ui) ^ mul(rj[r], uj) == syn[r] for r in range(2, p.c)
        )
        e, tail = self.region(i)
        width = f"0{p.ell}b"
        dec = (format(ui, width) + format(uj, width))[:self.pair_len(i)]
        superseq_ok = is_subsequence(e, dec)
        cand = None
        if padding_ok and parities_ok and superseq_ok:
            cand = self.s[:(i - 1) * p.ell] + dec + (self.s[len(self.s) - tail:] if tail else "")
        return GuessEval(guess=i, decoded_pair=(ui, uj), erased_region=e,
                         decoded_bits=dec, padding_ok=padding_ok,
                         parities_ok=parities_ok, supersequence_ok=superseq_ok,
                         candidate=cand)


def evaluate_guess(s, i, parities, p):
    """Verdict for the guess that blocks (i, i+1) absorbed the deletions.

    s is the received word truncated to its first k - delta bits, parities
    the c parity symbols read off the intact tail. 1 <= i <= m - 1.
    """
    if not 1 <= i <= p.m - 1:
        raise ValueError(f"guess index must be in [1, {p.m - 1}], got {i}")
    if not p.k - p.w <= len(s) <= p.k:
        raise ValueError(f"systematic part must hold k - w .. k bits, got {len(s)}")
    return _GuessContext(s, list(parities), p).evaluate(i)


def try_guess(s, i, parities, p):
    """Candidate message under guess i, or None when the guess is impossible."""
    return evaluate_guess(s, i, parities, p).candidate


def decode(y, p):
    """Decode a received word missing up to w bits from one window.

    Success carries the recovered message and how it was reached (a pair
    index, or None for the parity path). Failure carries every distinct
    surviving candidate. InvalidInput flags a word no compliant channel
    could have produced.
    """
    if len(y) > p.n:
        return DecodeResult(INVALID_INPUT, reason=f"{len(y)} bits exceed the code length {p.n}")
    if len(y) < p.n - p.w:
        return DecodeResult(
            INVALID_INPUT,
            reason=f"{p.n - len(y)} deletions exceed the window size {p.w}",
        )
    delta = p.n - len(y)
    if delta == 0 or y[p.k + p.w - delta] == "0":
        return DecodeResult(SUCCESS, message=y[:p.k], guess=None)
    parities = bits_to_symbols(y[len(y) - p.c * p.ell:], p.ctx)
    ctx = _GuessContext(y[:p.k - delta], parities, p)
    winners = {}
    for i in range(1, p.m):
        cand = ctx.candidate(i)
        if cand is not None and cand not in winners:
            winners[cand] = i
    if not winners:
        return DecodeResult(INVALID_INPUT, reason="no deletion placement is consistent")
    if len(winners) == 1:
        cand, i = next(iter(winners.items()))
        return DecodeResult(SUCCESS, message=cand, guess=i)
    return DecodeResult(FAILURE, candidates=tuple(winners))
