"""Arithmetic in GF(2^ell) backed by log/antilog tables.

Field elements are plain ints in [0, 2^ell) holding polynomial coefficients
over GF(2), most significant coefficient first: the bit string "1100" in a
4-bit field is x^3 + x^2. Addition is xor; multiplication and inversion go
through discrete-log tables built once per context.
"""

MIN_ELL = 2
MAX_ELL = 24

# Lowest-weight primitive polynomial per degree, leading term included
# (0x13 is x^4 + x + 1). Each entry is re-verified at construction time.
DEFAULT_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
}


class UnsupportedExponentError(ValueError):
    pass


class NonPrimitivePolynomialError(ValueError):
    pass


class FieldContext:
    """GF(2^ell) with alpha the root of a primitive polynomial.

    Construction walks alpha^0, alpha^1, ... and fails if the walk returns
    to 1 before visiting every nonzero element, so a non-primitive modulus
    cannot produce a usable context. The antilog table is stored at double
    length so products never need a modular reduction of the exponent sum.
    """

    def __init__(self, ell, primitive_poly=None):
        if not MIN_ELL <= ell <= MAX_ELL:
            raise UnsupportedExponentError(f"ell={ell} outside [{MIN_ELL}, {MAX_ELL}]")
        if primitive_poly is None:
            primitive_poly = DEFAULT_POLYS[ell]
        if primitive_poly.bit_length() != ell + 1:
            raise NonPrimitivePolynomialError(
                f"polynomial 0x{primitive_poly:x} does not have degree {ell}"
            )
        self.ell = ell
        self.poly = primitive_poly
        self.order = (1 << ell) - 1
        exp = [0] * (2 * self.order)
        log = [None] * (1 << ell)
        x = 1
        for i in range(self.order):
            if log[x] is not None:
                raise NonPrimitivePolynomialError(
                    f"0x{primitive_poly:x} is not primitive: alpha cycles after {i} steps"
                )
            exp[i] = x
            exp[i + self.order] = x
            log[x] = i
            x <<= 1
            if x >> ell:
                x ^= primitive_poly
        if x != 1:
            raise NonPrimitivePolynomialError(f"0x{primitive_poly:x} is not primitive")
        self.exp = exp
        self.log = log

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[self.order - self.log[a]]

    def alpha_pow(self, e):
        """alpha^e for any integer e (reduced mod 2^ell - 1)."""
        return self.exp[e % self.order]

    def __repr__(self):
        return f"FieldContext(ell={self.ell}, poly=0x{self.poly:x})"


def bits_to_symbols(bits, ctx):
    """Chunk a '0'/'1' string into field symbols of ell bits each.

    A short final chunk keeps its bits in the high coefficient positions;
    the missing low positions read as zero.
    """
    ell = ctx.ell
    out = []
    for pos in range(0, len(bits), ell):
        chunk = bits[pos:pos + ell]
        out.append(int(chunk, 2) << (ell - len(chunk)))
    return out


def symbols_to_bits(symbols, ctx):
    """Inverse of bits_to_symbols for full-width blocks."""
    ell = ctx.ell
    return "".join(format(v, f"0{ell}b") for v in symbols)
