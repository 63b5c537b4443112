# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_fallback`` function by function."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, log, lgamma, sqrt, cos, sin, fabs, M_PI
from libc.stdlib cimport malloc, free

cdef extern from "math.h" nogil:
    void sincos(double x, double* s, double* c)

cnp.import_array()

ctypedef unsigned long long u64

cdef double EPS = 1e-16
cdef double FPMIN = 1e-300
cdef int MAX_ITER = 10000


cdef inline u64 powmod(u64 base, u64 e, u64 mod) noexcept nogil:
    cdef u64 result = 1
    base %= mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


cdef inline void neumaier_add(double* s, double* comp, double x) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        comp[0] += (s[0] - t) + x
    else:
        comp[0] += (x - t) + s[0]
    s[0] = t


cdef double _gammaincc(double c, double x) noexcept nogil:
    cdef double log_pref, ap, term, total, b, cc, d, h, an, delta
    cdef int i
    if x == 0.0:
        return 1.0
    log_pref = -x + c * log(x) - lgamma(c)
    if x < c + 1.0:
        ap = c
        term = 1.0 / c
        total = term
        for i in range(MAX_ITER):
            ap += 1.0
            term *= x / ap
            total += term
            if fabs(term) < fabs(total) * EPS:
                break
        return 1.0 - total * exp(log_pref)
    b = x + 1.0 - c
    cc = 1.0 / FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, MAX_ITER):
        an = -i * (i - c)
        b += 2.0
        d = an * d + b
        if fabs(d) < FPMIN:
            d = FPMIN
        cc = b + an / cc
        if fabs(cc) < FPMIN:
            cc = FPMIN
        d = 1.0 / d
        delta = d * cc
        h *= delta
        if fabs(delta - 1.0) < EPS:
            break
    return exp(log_pref) * h


def gammaincc(double c, double x):
    if x < 0 or c <= 0:
        raise ValueError("gammaincc needs c > 0 and x >= 0")
    return _gammaincc(c, x)


def v_weights(double c, double A, Py_ssize_t M):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] arr = np.zeros(M + 1, dtype=np.float64)
    cdef double[::1] out = arr
    cdef double scale = M_PI / (A * A)
    cdef Py_ssize_t m
    with nogil:
        for m in range(1, M + 1):
            out[m] = _gammaincc(c, scale * m * m) / sqrt(<double>m)
    return arr


def char_exponents(primes, images, int d, Py_ssize_t M):
    cdef Py_ssize_t k = len(primes)
    cdef Py_ssize_t i, j, m, s
    cdef u64 p, t
    cdef int e, a, b
    cdef cnp.ndarray[cnp.int8_t, ndim=1] arr = np.zeros(M + 1, dtype=np.int8)
    cdef signed char[::1] out = arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] spf_arr = np.arange(M + 1, dtype=np.int64)
    cdef long long[::1] spf = spf_arr
    cdef u64* ps = <u64*>malloc((k + 1) * sizeof(u64))
    cdef u64* pw = <u64*>malloc((k * 4 + 1) * sizeof(u64))
    if ps == NULL or pw == NULL:
        free(ps); free(pw)
        raise MemoryError()
    try:
        for i in range(k):
            p = <u64>int(primes[i])
            if p >= (<u64>1 << 32):
                raise OverflowError("prime too large for the compiled kernel")
            ps[i] = p
            for j in range(d):
                pw[i * 4 + j] = powmod(<u64>int(images[i]), j, p)
        with nogil:
            if M >= 0:
                out[0] = -1 if k > 0 else 0
            i = 2
            while i * i <= M:
                if spf[i] == i:
                    j = i * i
                    while j <= M:
                        if spf[j] == j:
                            spf[j] = i
                        j += i
                i += 1
            for m in range(2, M + 1):
                s = spf[m]
                if s == m:
                    e = 0
                    for i in range(k):
                        p = ps[i]
                        if <u64>m % p == 0:
                            e = -1
                            break
                        t = powmod(<u64>m, (p - 1) / d, p)
                        for j in range(d):
                            if pw[i * 4 + j] == t:
                                e += j
                                break
                    out[m] = (e % d) if e >= 0 else -1
                else:
                    a = out[s]
                    b = out[m / s]
                    out[m] = -1 if (a < 0 or b < 0) else (a + b) % d
    finally:
        free(ps)
        free(pw)
    return arr


def weight_buckets(const signed char[::1] exps, const double[::1] weights, int d):
    cdef Py_ssize_t n = min(exps.shape[0], weights.shape[0])
    cdef Py_ssize_t m
    cdef int j
    cdef double s[4]
    cdef double comp[4]
    for j in range(4):
        s[j] = 0.0
        comp[j] = 0.0
    with nogil:
        for m in range(1, n):
            j = exps[m]
            if j >= 0:
                neumaier_add(&s[j], &comp[j], weights[m])
    return np.array([s[j] + comp[j] for j in range(d)], dtype=np.float64)


def gauss_periods(long long p_in, long long g_in, int d):
    cdef u64 p = <u64>p_in, g = <u64>g_in, x = 1
    cdef Py_ssize_t k, half = (p_in - 1) // 2
    cdef int j, jbar
    cdef double theta, c, s, step = 2.0 * M_PI / <double>p_in
    cdef double sr[4]
    cdef double cr[4]
    cdef double si[4]
    cdef double ci[4]
    if p >= (<u64>1 << 32):
        raise OverflowError("prime too large for the compiled kernel")
    for j in range(4):
        sr[j] = 0.0; cr[j] = 0.0; si[j] = 0.0; ci[j] = 0.0
    with nogil:
        # g^(k + half) = -g^k, so each evaluation feeds the conjugate term too
        for k in range(half):
            j = k % d
            jbar = (k + half) % d
            theta = step * <double>x
            sincos(theta, &s, &c)
            neumaier_add(&sr[j], &cr[j], c)
            neumaier_add(&si[j], &ci[j], s)
            neumaier_add(&sr[jbar], &cr[jbar], c)
            neumaier_add(&si[jbar], &ci[jbar], -s)
            x = x * g % p
    return np.array([complex(sr[j] + cr[j], si[j] + ci[j]) for j in range(d)])
