"""Systematic MDS parity layer: generator construction, parity encoding,
erasure solving, and parity verification over a shared field context.

Block and parity positions in the public functions are numbered from 1,
matching the way code blocks are counted everywhere else in this package.
"""

from dataclasses import dataclass

from .gf2e import FieldContext


class FieldTooSmallError(ValueError):
    pass


class SingularSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Generator:
    """Parity weights for a systematic (m + c, m) code.

    rows[i][r] is the weight of systematic symbol i+1 in parity r+1, so
    parity r+1 of a message U is xor_i mul(U[i], rows[i][r]).
    """

    m: int
    c: int
    kind: str
    ctx: FieldContext
    rows: tuple


def cauchy_generator(m, c, ctx):
    """Cauchy-style parity weights 1 / (a_i + b_j) with a_i = i - 1 and
    b_j = m + j - 1 as field elements. All square submatrices of the
    resulting parity block are nonsingular, so any pattern of erasures
    covered by enough parities is solvable.
    """
    if m + c > (1 << ctx.ell):
        raise FieldTooSmallError(
            f"m + c = {m + c} exceeds field size 2^{ctx.ell} = {1 << ctx.ell}"
        )
    rows = tuple(
        tuple(ctx.inv(i ^ (m + j)) for j in range(c))
        for i in range(m)
    )
    return Generator(m=m, c=c, kind="cauchy", ctx=ctx, rows=rows)


def vandermonde_generator(m, c, ctx):
    """Power-of-alpha parity weights alpha^{(i-1)(r-1)}.

    Not guaranteed MDS for every (m, c, ell); a guess that leads to an
    unsolvable erasure system surfaces as SingularSystemError.
    """
    if m + c > (1 << ctx.ell):
        raise FieldTooSmallError(
            f"m + c = {m + c} exceeds field size 2^{ctx.ell} = {1 << ctx.ell}"
        )
    rows = tuple(
        tuple(ctx.alpha_pow(i * r) for r in range(c))
        for i in range(m)
    )
    return Generator(m=m, c=c, kind="vandermonde", ctx=ctx, rows=rows)


def make_generator(m, c, ctx, kind="cauchy"):
    if kind == "cauchy":
        return cauchy_generator(m, c, ctx)
    if kind == "vandermonde":
        return vandermonde_generator(m, c, ctx)
    raise ValueError(f"unknown generator kind {kind!r}")


def encode_parities(symbols, gen):
    """All c parity symbols for a full systematic vector."""
    if len(symbols) != gen.m:
        raise ValueError(f"expected {gen.m} symbols, got {len(symbols)}")
    mul = gen.ctx.mul
    out = []
    for r in range(gen.c):
        acc = 0
        for i, v in enumerate(symbols):
            acc ^= mul(v, gen.rows[i][r])
        out.append(acc)
    return out


def verify_parities(symbols, parity_values, parity_nums, gen):
    """True iff the selected parities recomputed from symbols match
    parity_values (parallel to parity_nums, numbered from 1)."""
    if len(symbols) != gen.m:
        raise ValueError(f"expected {gen.m} symbols, got {len(symbols)}")
    if len(parity_values) != len(parity_nums):
        raise ValueError("parity_values and parity_nums differ in length")
    mul = gen.ctx.mul
    for val, num in zip(parity_values, parity_nums):
        acc = 0
        for i, v in enumerate(symbols):
            acc ^= mul(v, gen.rows[i][num - 1])
        if acc != val:
            return False
    return True


def solve_square(matrix, rhs, ctx):
    """Solve A x = b over the field by Gaussian elimination.

    matrix is a list of row lists (consumed destructively on copies),
    rhs a parallel list. Raises SingularSystemError when no unique
    solution exists.
    """
    size = len(rhs)
    a = [list(row) for row in matrix]
    b = list(rhs)
    mul = ctx.mul
    inv = ctx.inv
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            raise SingularSystemError("erasure system has no unique solution")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        scale = inv(a[col][col])
        a[col] = [mul(scale, v) for v in a[col]]
        b[col] = mul(scale, b[col])
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x ^ mul(f, y) for x, y in zip(a[r], a[col])]
                b[r] ^= mul(f, b[col])
    return b


def erasure_decode(symbols, erased, parity_values, parity_nums, gen):
    """Fill in erased symbol positions from the given parities.

    symbols: full-length sequence; entries at erased positions are ignored
    (None is fine). erased: block numbers (from 1), one per unknown.
    parity_values is parallel to parity_nums and must have the same length
    as erased, making the system square.
    """
    if len(symbols) != gen.m:
        raise ValueError(f"expected {gen.m} symbols, got {len(symbols)}")
    erased = sorted(erased)
    if len(set(erased)) != len(erased):
        raise ValueError("erased positions must be distinct")
    if len(erased) != len(parity_nums) or len(parity_values) != len(parity_nums):
        raise ValueError("need exactly one parity per erased position")
    mul = gen.ctx.mul
    erased_set = set(erased)
    syndromes = []
    matrix = []
    for val, num in zip(parity_values, parity_nums):
        acc = val
        for i, v in enumerate(symbols):
            if i + 1 not in erased_set:
                acc ^= mul(v, gen.rows[i][num - 1])
        syndromes.append(acc)
        matrix.append([gen.rows[e - 1][num - 1] for e in erased])
    solution = solve_square(matrix, syndromes, gen.ctx)
    filled = list(symbols)
    for e, v in zip(erased, solution):
        filled[e - 1] = v
    return filled
