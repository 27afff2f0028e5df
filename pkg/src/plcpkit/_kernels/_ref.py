"""Pure-Python F2 kernels using ints as bit vectors.

Mirrors the compiled backend's API exactly; it is selected when the
extension is not built or PLCPKIT_BACKEND=pure is set.  Bit i of a
packed int is the coefficient of x^i (equivalently the sequence term of
index i).
"""

BACKEND_NAME = "pure-python"


def pack_bits(bits):
    if not bits:
        return 0
    return int("".join("1" if b else "0" for b in reversed(bits)), 2)


def unpack_bits(x, n):
    if n <= 0:
        return []
    s = format(x & ((1 << n) - 1), f"0{n}b")
    return [1 if c == "1" else 0 for c in reversed(s)]


def lcp_profile(bits):
    """Incremental linear complexity L(1..N) of a 0/1 list."""
    prof = []
    c = 1  # connection polynomial, bit i = coeff of x^i, c(0) = 1
    b = 1  # previous connection polynomial
    l = 0
    m = 1  # steps since the last length change
    w = 0  # window, bit i = bits[n - i]
    for n, s in enumerate(bits):
        w = (w << 1) | (1 if s else 0)
        if (c & w).bit_count() & 1:
            if 2 * l <= n:
                c, b = c ^ (b << m), c
                l = n + 1 - l
                m = 1
            else:
                c ^= b << m
                m += 1
        else:
            m += 1
        prof.append(l)
    return prof


def hankel_parities(bits, m):
    """Parities of the order 1..m Hankel determinants of a 0/1 list.

    The order-n matrix has entry (i, j) = bits[i + j]; each order is
    eliminated independently mod 2.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if 2 * m - 1 > len(bits):
        raise ValueError(f"need 2*{m}-1 terms, have {len(bits)}")
    full = pack_bits(bits)
    out = []
    for n in range(1, m + 1):
        mask = (1 << n) - 1
        rows = [(full >> i) & mask for i in range(n)]
        parity = 1
        for col in range(n):
            pos = 1 << col
            piv = -1
            for r in range(col, n):
                if rows[r] & pos:
                    piv = r
                    break
            if piv < 0:
                parity = 0
                break
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
            pr = rows[col]
            for r in range(col + 1, n):
                if rows[r] & pos:
                    rows[r] ^= pr
        out.append(parity)
    return out


def _inv_packed(u, prec):
    # long division of 1 by u (constant term 1), mod x^prec
    r, e = 1, 0
    for i in range(prec):
        if r & 1:
            e |= 1 << i
            r ^= u
        r >>= 1
    return e


def series_inverse(bits):
    """Inverse of a unit power series given as a coefficient list."""
    prec = len(bits)
    if prec == 0 or not bits[0]:
        raise ValueError("constant term must be 1")
    u = pack_bits(bits)
    return unpack_bits(_inv_packed(u, prec), prec)


def laurent_cf(bits):
    """Continued fraction of sum_n bits[n-1] x^n from N known coefficients.

    Returns (quotients, bound): packed partial quotients in t (all monic
    over F2), extracted only while the remainder precision certifies
    them, and a lower bound for the degree of the next quotient.
    """
    n = len(bits)
    r = pack_bits(bits) << 1  # bit i = coefficient of x^i
    k = n  # bits 1..k of r are known
    quotients = []
    while True:
        if r == 0:
            return quotients, (k + 1 if k >= 1 else 1)
        v = (r & -r).bit_length() - 1
        if 2 * v > k:
            return quotients, v
        prec = k - v + 1
        u = (r >> v) & ((1 << prec) - 1)
        iu = _inv_packed(u, prec)
        # partial quotient: coefficient of t^j is bit (v - j) of iu
        a = 0
        for j in range(v + 1):
            if (iu >> (v - j)) & 1:
                a |= 1 << j
        quotients.append(a)
        k -= 2 * v
        r = (iu >> v) & (((1 << (k + 1)) - 1) & ~1)
