# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Dedekind sums and the matrix invariant on 128-bit ints.

Twin of ``_kernels_py``; the wrappers in ``kernels`` only route calls here
inside static bounds proved safe for the __int128 intermediates:

  * dedekind sums: k <= 10**6   (reduced results then fit in 64 bits)
  * matrix invariant: all entries bounded by 10**9 in absolute value

Outside those bounds callers fall back to the arbitrary-precision twin.
"""

cdef extern from *:
    ctypedef long long i128 "__int128"


cdef inline i128 iabs(i128 x) nogil:
    return -x if x < 0 else x


cdef inline i128 gcd128(i128 a, i128 b) nogil:
    cdef i128 t
    a = iabs(a)
    b = iabs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int ded_fast_c(i128 h, i128 k, i128 *onum, i128 *oden) nogil:
    """Reciprocity-descent Dedekind sum; result in *onum / *oden (reduced)."""
    cdef i128 num = 0, den = 1, sign = 1, hk, t_num, t_den, g, t
    h %= k
    if h < 0:
        h += k
    while h != 0:
        hk = h * k
        t_den = 48 * hk
        t_num = 4 * (h * h + k * k + 1) - 12 * hk
        num = num * t_den + sign * t_num * den
        den = den * t_den
        g = gcd128(num, den)
        num /= g
        den /= g
        sign = -sign
        t = k % h
        k = h
        h = t
    onum[0] = num
    oden[0] = den
    return 0


cdef void ded_naive_c(i128 h, i128 k, i128 *onum, i128 *oden) nogil:
    """Direct-summation Dedekind sum: 12*k^2*s = 12*sum(r*(h*r mod k)) - 3*k^2*(k-1)."""
    cdef i128 x = 0, r, num, den, g
    h %= k
    if h < 0:
        h += k
    if k == 1:
        onum[0] = 0
        oden[0] = 1
        return
    for r in range(1, k):
        x += r * ((h * r) % k)
    num = 12 * x - 3 * k * k * (k - 1)
    den = 12 * k * k
    g = gcd128(num, den)
    onum[0] = num / g
    oden[0] = den / g


def dedekind_fast(long long h, long long k):
    """Reduced (num, den) of s(h, k) by the logarithmic descent; k <= 10**6."""
    cdef i128 num, den
    ded_fast_c(h, k, &num, &den)
    return <long long> num, <long long> den


def dedekind_naive(long long h, long long k):
    """Reduced (num, den) of s(h, k) by direct summation; k <= 10**6."""
    cdef i128 num, den
    ded_naive_c(h, k, &num, &den)
    return <long long> num, <long long> den


def psi(long long a, long long b, long long c, long long d):
    """Four-case integer invariant of a determinant-1 matrix; entries <= 10**9."""
    cdef i128 num, den, total, cden, q
    cdef long long off
    if c == 0:
        return b if a > 0 else -b - 6
    if c > 0:
        ded_fast_c(-d, c, &num, &den)
        off = -3
    else:
        ded_fast_c(d, -c, &num, &den)
        off = 3
    total = (<i128> (a + d)) * den + 12 * num * c + (<i128> off) * c * den
    cden = (<i128> c) * den
    q = total / cden
    if q * cden != total:
        raise ArithmeticError(
            "non-integral value for matrix (%d,%d,%d,%d)" % (a, b, c, d)
        )
    return <long long> q


def scan_fast_vs_naive(long long kmax):
    """Check fast == naive over every coprime (h, k), k <= kmax; returns count."""
    cdef i128 n1, d1, n2, d2
    cdef long long k, h, checked = 0
    if kmax < 1:
        return 0
    ded_fast_c(0, 1, &n1, &d1)
    ded_naive_c(0, 1, &n2, &d2)
    if n1 != n2 or d1 != d2 or n1 != 0 or d1 != 1:
        raise AssertionError("dedekind mismatch at (0, 1)")
    checked = 1
    for k in range(2, kmax + 1):
        for h in range(1, k):
            if gcd128(h, k) != 1:
                continue
            ded_fast_c(h, k, &n1, &d1)
            ded_naive_c(h, k, &n2, &d2)
            if n1 != n2 or d1 != d2:
                raise AssertionError(
                    "dedekind mismatch at (h, k) = (%d, %d)" % (h, k)
                )
            checked += 1
    return checked
