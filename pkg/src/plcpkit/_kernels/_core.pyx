# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled F2 kernels on uint64 words; API-identical to the fallback."""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #define popcnt64(x) __builtin_popcountll((unsigned long long)(x))
    """
    int popcnt64(uint64_t x)

BACKEND_NAME = "compiled"


cdef inline void _xor_shifted(uint64_t* dst, uint64_t* src, Py_ssize_t src_words,
                              Py_ssize_t shift, Py_ssize_t dst_words):
    # dst ^= src << shift, clipped to dst_words
    cdef Py_ssize_t off = shift >> 6
    cdef int sh = <int>(shift & 63)
    cdef Py_ssize_t i
    cdef uint64_t cur, prev
    if sh == 0:
        for i in range(src_words - 1, -1, -1):
            if i + off < dst_words:
                dst[i + off] ^= src[i]
        return
    for i in range(src_words - 1, -1, -1):
        cur = src[i] << sh
        prev = src[i - 1] >> (64 - sh) if i > 0 else 0
        if i + off < dst_words:
            dst[i + off] ^= cur | prev
    # top spill of the highest source word
    if src_words + off < dst_words and src_words > 0:
        dst[src_words + off] ^= src[src_words - 1] >> (64 - sh)


cdef inline void _shr_into(uint64_t* dst, uint64_t* src, Py_ssize_t shift,
                           Py_ssize_t nbits, Py_ssize_t dst_words):
    # dst = (src >> shift) masked to nbits, zero-padded to dst_words
    cdef Py_ssize_t off = shift >> 6
    cdef int sh = <int>(shift & 63)
    cdef Py_ssize_t need = (nbits + 63) >> 6
    cdef Py_ssize_t i
    cdef uint64_t lo, hi
    memset(dst, 0, dst_words * sizeof(uint64_t))
    for i in range(need):
        lo = src[i + off] >> sh
        if sh != 0:
            hi = src[i + off + 1] << (64 - sh)
            lo |= hi
        dst[i] = lo
    cdef int top = <int>(nbits & 63)
    if top != 0:
        dst[need - 1] &= (<uint64_t>1 << top) - 1


cdef inline Py_ssize_t _lowest_bit(uint64_t* a, Py_ssize_t words):
    # index of the lowest set bit, or -1
    cdef Py_ssize_t i
    cdef uint64_t w
    cdef int b
    for i in range(words):
        w = a[i]
        if w != 0:
            b = 0
            while not (w & 1):
                w >>= 1
                b += 1
            return (i << 6) + b
    return -1


cdef inline void _shr1(uint64_t* a, Py_ssize_t words):
    cdef Py_ssize_t i
    for i in range(words - 1):
        a[i] = (a[i] >> 1) | (a[i + 1] << 63)
    a[words - 1] >>= 1


cdef _to_pyint(uint64_t* a, Py_ssize_t nbits):
    # little-endian bytes -> python int
    cdef Py_ssize_t nbytes = (nbits + 7) >> 3
    cdef bytearray buf = bytearray(nbytes)
    cdef Py_ssize_t i
    for i in range(nbytes):
        buf[i] = <unsigned char>((a[i >> 3] >> ((i & 7) << 3)) & 0xFF)
    return int.from_bytes(bytes(buf), "little")


cdef uint64_t* _pack_list(list bl, Py_ssize_t n, Py_ssize_t words, Py_ssize_t offset) except NULL:
    # pack bl[0..n) into freshly allocated words, bit (i + offset) = bl[i]
    cdef uint64_t* arr = <uint64_t*>calloc(words, sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(n):
        if bl[i]:
            j = i + offset
            arr[j >> 6] |= <uint64_t>1 << (j & 63)
    return arr


def lcp_profile(bits):
    """Incremental linear complexity L(1..N) of a 0/1 list."""
    cdef list bl = list(bits)
    cdef Py_ssize_t n = len(bl)
    cdef Py_ssize_t words = (n >> 6) + 2
    cdef uint64_t* c = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* b = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* w = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* tmp = <uint64_t*>calloc(words, sizeof(uint64_t))
    if c == NULL or b == NULL or w == NULL or tmp == NULL:
        free(c); free(b); free(w); free(tmp)
        raise MemoryError()
    cdef list prof = []
    cdef Py_ssize_t l = 0, m = 1, i, j, hi, cw
    cdef int d
    cdef uint64_t* swp
    c[0] = 1
    b[0] = 1
    try:
        for i in range(n):
            # w <<= 1; w |= bits[i]
            hi = ((i + 1) >> 6) + 1
            if hi >= words:
                hi = words - 1
            for j in range(hi, 0, -1):
                w[j] = (w[j] << 1) | (w[j - 1] >> 63)
            w[0] <<= 1
            if bl[i]:
                w[0] |= 1
            # discrepancy = parity(c & w); deg c <= l
            cw = (l >> 6) + 1
            d = 0
            for j in range(cw):
                d ^= popcnt64(c[j] & w[j]) & 1
            if d:
                if 2 * l <= i:
                    memcpy(tmp, c, words * sizeof(uint64_t))
                    _xor_shifted(c, b, words, m, words)
                    swp = b; b = tmp; tmp = swp
                    l = i + 1 - l
                    m = 1
                else:
                    _xor_shifted(c, b, words, m, words)
                    m += 1
            else:
                m += 1
            prof.append(l)
        return prof
    finally:
        free(c); free(b); free(w); free(tmp)


def hankel_parities(bits, m):
    """Parities of the order 1..m Hankel determinants of a 0/1 list."""
    cdef list bl = list(bits)
    cdef Py_ssize_t nb = len(bl)
    cdef Py_ssize_t order = m
    if order < 1:
        raise ValueError("m must be >= 1")
    if 2 * order - 1 > nb:
        raise ValueError(f"need 2*{order}-1 terms, have {nb}")
    cdef Py_ssize_t fwords = ((nb + 63) >> 6) + 1
    cdef uint64_t* full = _pack_list(bl, nb, fwords, 0)
    cdef Py_ssize_t rw_max = ((order + 63) >> 6)
    cdef uint64_t* rows = <uint64_t*>calloc(order * rw_max, sizeof(uint64_t))
    cdef uint64_t** rp = <uint64_t**>calloc(order, sizeof(uint64_t*))
    cdef list out = []
    cdef Py_ssize_t n, rw, i, j, col, piv, r, start, sw
    cdef int sh, parity, top
    cdef uint64_t lo, mask_top, pos
    cdef uint64_t* tmpp
    if rows == NULL or rp == NULL:
        free(full); free(rows); free(rp)
        raise MemoryError()
    try:
        for n in range(1, order + 1):
            rw = (n + 63) >> 6
            top = <int>(n & 63)
            mask_top = ((<uint64_t>1 << top) - 1) if top != 0 else <uint64_t>0xFFFFFFFFFFFFFFFF
            for i in range(n):
                rp[i] = rows + i * rw_max
                for j in range(rw):
                    start = i + (j << 6)
                    sw = start >> 6
                    sh = <int>(start & 63)
                    lo = full[sw] >> sh
                    if sh != 0:
                        lo |= full[sw + 1] << (64 - sh)
                    rp[i][j] = lo
                rp[i][rw - 1] &= mask_top
            parity = 1
            for col in range(n):
                sw = col >> 6
                pos = <uint64_t>1 << (col & 63)
                piv = -1
                for r in range(col, n):
                    if rp[r][sw] & pos:
                        piv = r
                        break
                if piv < 0:
                    parity = 0
                    break
                if piv != col:
                    tmpp = rp[col]; rp[col] = rp[piv]; rp[piv] = tmpp
                for r in range(col + 1, n):
                    if rp[r][sw] & pos:
                        for j in range(sw, rw):
                            rp[r][j] ^= rp[col][j]
            out.append(parity)
        return out
    finally:
        free(full); free(rows); free(rp)


cdef void _inverse_loop(uint64_t* u, uint64_t* e, uint64_t* rr,
                        Py_ssize_t prec, Py_ssize_t words):
    # e = 1/u mod x^prec (constant term of u must be 1); rr is scratch
    cdef Py_ssize_t i, j, uw
    uw = ((prec + 63) >> 6)
    memset(e, 0, words * sizeof(uint64_t))
    memset(rr, 0, words * sizeof(uint64_t))
    rr[0] = 1
    for i in range(prec):
        if rr[0] & 1:
            e[i >> 6] |= <uint64_t>1 << (i & 63)
            for j in range(uw):
                rr[j] ^= u[j]
        _shr1(rr, uw)


def series_inverse(bits):
    """Inverse of a unit power series given as a coefficient list."""
    cdef list bl = list(bits)
    cdef Py_ssize_t prec = len(bl)
    if prec == 0 or not bl[0]:
        raise ValueError("constant term must be 1")
    cdef Py_ssize_t words = ((prec + 63) >> 6) + 1
    cdef uint64_t* u = _pack_list(bl, prec, words, 0)
    cdef uint64_t* e = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* rr = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef list out
    cdef Py_ssize_t i
    if e == NULL or rr == NULL:
        free(u); free(e); free(rr)
        raise MemoryError()
    try:
        _inverse_loop(u, e, rr, prec, words)
        out = [0] * prec
        for i in range(prec):
            if (e[i >> 6] >> (i & 63)) & 1:
                out[i] = 1
        return out
    finally:
        free(u); free(e); free(rr)


def laurent_cf(bits):
    """Continued fraction of sum_n bits[n-1] x^n; see the fallback docstring."""
    cdef list bl = list(bits)
    cdef Py_ssize_t n = len(bl)
    cdef Py_ssize_t words = ((n + 2 + 63) >> 6) + 2
    cdef uint64_t* r = _pack_list(bl, n, words, 1)
    cdef uint64_t* u = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* e = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* rr = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* q = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef list quotients = []
    cdef Py_ssize_t k = n, v, prec, j
    cdef Py_ssize_t bound
    if u == NULL or e == NULL or rr == NULL or q == NULL:
        free(r); free(u); free(e); free(rr); free(q)
        raise MemoryError()
    try:
        while True:
            v = _lowest_bit(r, words)
            if v < 0:
                bound = k + 1 if k >= 1 else 1
                return quotients, bound
            if 2 * v > k:
                return quotients, v
            prec = k - v + 1
            _shr_into(u, r, v, prec, words)
            _inverse_loop(u, e, rr, prec, words)
            # quotient: coefficient of t^j is bit (v - j) of e
            memset(q, 0, words * sizeof(uint64_t))
            for j in range(v + 1):
                if (e[(v - j) >> 6] >> ((v - j) & 63)) & 1:
                    q[j >> 6] |= <uint64_t>1 << (j & 63)
            quotients.append(_to_pyint(q, v + 1))
            k -= 2 * v
            _shr_into(r, e, v, k + 1, words)
            r[0] &= ~<uint64_t>1
    finally:
        free(r); free(u); free(e); free(rr); free(q)
