# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels on interleaved [re, im] double buffers.

Twin of _kernels_py: same operation order and expression shapes, so
the two backends produce bit-identical doubles (compiled with FMA
contraction disabled to preserve per-operation rounding).
"""

from libc.math cimport sqrt

BACKEND_NAME = "compiled"


def kron(double[::1] a, Py_ssize_t ra, Py_ssize_t ca,
         double[::1] b, Py_ssize_t rb, Py_ssize_t cb, double[::1] out):
    cdef Py_ssize_t rc = ca * cb
    cdef Py_ssize_t i, j, k, p, q, m, o, row
    cdef double ar, ai, br, bi
    for i in range(ra):
        for j in range(ca):
            k = 2 * (i * ca + j)
            ar = a[k]
            ai = a[k + 1]
            for p in range(rb):
                row = i * rb + p
                for q in range(cb):
                    m = 2 * (p * cb + q)
                    br = b[m]
                    bi = b[m + 1]
                    o = 2 * (row * rc + (j * cb + q))
                    out[o] = ar * br - ai * bi
                    out[o + 1] = ar * bi + ai * br


def matmul(double[::1] a, Py_ssize_t ra, Py_ssize_t ca,
           double[::1] b, Py_ssize_t cb, double[::1] out):
    cdef Py_ssize_t i, j, k, p, q, o
    cdef double sr, si, ar, ai, br, bi
    for i in range(ra):
        for j in range(cb):
            sr = 0.0
            si = 0.0
            for k in range(ca):
                p = 2 * (i * ca + k)
                q = 2 * (k * cb + j)
                ar = a[p]
                ai = a[p + 1]
                br = b[q]
                bi = b[q + 1]
                sr += ar * br - ai * bi
                si += ar * bi + ai * br
            o = 2 * (i * cb + j)
            out[o] = sr
            out[o + 1] = si


def dagger(double[::1] a, Py_ssize_t ra, Py_ssize_t ca, double[::1] out):
    cdef Py_ssize_t i, j, p, o
    for i in range(ra):
        for j in range(ca):
            p = 2 * (i * ca + j)
            o = 2 * (j * ra + i)
            out[o] = a[p]
            out[o + 1] = -a[p + 1]


def add(double[::1] a, double[::1] b, Py_ssize_t n, double[::1] out):
    cdef Py_ssize_t k
    for k in range(2 * n):
        out[k] = a[k] + b[k]


def scale(double[::1] a, double sr, double si, Py_ssize_t n, double[::1] out):
    cdef Py_ssize_t k, p
    cdef double ar, ai
    for k in range(n):
        p = 2 * k
        ar = a[p]
        ai = a[p + 1]
        out[p] = ar * sr - ai * si
        out[p + 1] = ar * si + ai * sr


def trace(double[::1] a, Py_ssize_t n):
    cdef Py_ssize_t i, p
    cdef double tr = 0.0
    cdef double ti = 0.0
    for i in range(n):
        p = 2 * (i * n + i)
        tr += a[p]
        ti += a[p + 1]
    return tr, ti


def vec_norm2(double[::1] v, Py_ssize_t n):
    cdef Py_ssize_t k, p
    cdef double s = 0.0
    for k in range(n):
        p = 2 * k
        s += v[p] * v[p] + v[p + 1] * v[p + 1]
    return s


def frob_dist(double[::1] a, double[::1] b, Py_ssize_t n):
    cdef Py_ssize_t k, p
    cdef double s = 0.0
    cdef double dr, di
    for k in range(n):
        p = 2 * k
        dr = a[p] - b[p]
        di = a[p + 1] - b[p + 1]
        s += dr * dr + di * di
    return sqrt(s)


def outer_conj(double[::1] v, Py_ssize_t n, double[::1] out):
    cdef Py_ssize_t i, j, p, q, o
    cdef double ar, ai, br, bi
    for i in range(n):
        p = 2 * i
        ar = v[p]
        ai = v[p + 1]
        for j in range(n):
            q = 2 * j
            br = v[q]
            bi = v[q + 1]
            o = 2 * (i * n + j)
            out[o] = ar * br + ai * bi
            out[o + 1] = ai * br - ar * bi


def herm_defect(double[::1] a, Py_ssize_t n):
    cdef Py_ssize_t i, j, p, q
    cdef Py_ssize_t bi = 0
    cdef Py_ssize_t bj = 0
    cdef double best = -1.0
    cdef double dr, di, m
    for i in range(n):
        for j in range(i, n):
            p = 2 * (i * n + j)
            q = 2 * (j * n + i)
            dr = a[p] - a[q]
            di = a[p + 1] + a[q + 1]
            m = sqrt(dr * dr + di * di)
            if m > best:
                best = m
                bi = i
                bj = j
    return best, bi, bj


def ptranspose(double[::1] a, Py_ssize_t n, Py_ssize_t mask, double[::1] out):
    cdef Py_ssize_t inv = (n - 1) ^ mask
    cdef Py_ssize_t r, c, sr, sc, p, o
    for r in range(n):
        for c in range(n):
            sr = (r & inv) | (c & mask)
            sc = (c & inv) | (r & mask)
            p = 2 * (sr * n + sc)
            o = 2 * (r * n + c)
            out[o] = a[p]
            out[o + 1] = a[p + 1]


def ptrace(double[::1] a, Py_ssize_t n, long long[::1] idx,
           Py_ssize_t kd, Py_ssize_t dd, double[::1] out):
    cdef Py_ssize_t i, j, d, p, o
    cdef double sr, si
    for i in range(kd):
        for j in range(kd):
            sr = 0.0
            si = 0.0
            for d in range(dd):
                p = 2 * (idx[i * dd + d] * n + idx[j * dd + d])
                sr += a[p]
                si += a[p + 1]
            o = 2 * (i * kd + j)
            out[o] = sr
            out[o + 1] = si


def lu_det(double[::1] a, Py_ssize_t n, double tol2):
    # a is an n x n scratch buffer, destroyed in place.
    cdef double dr = 1.0
    cdef double di = 0.0
    cdef Py_ssize_t k, i, j, piv, p, q, u, v, kp, pp
    cdef double best, m, t, pr, pi, ndr, ndi, d, br, bi, fr, fi, ur, ui
    for k in range(n):
        best = -1.0
        piv = k
        for i in range(k, n):
            p = 2 * (i * n + k)
            m = a[p] * a[p] + a[p + 1] * a[p + 1]
            if m > best:
                best = m
                piv = i
        if best < tol2:
            return 0.0, 0.0
        if piv != k:
            kp = 2 * k * n
            pp = 2 * piv * n
            for j in range(2 * n):
                t = a[kp + j]
                a[kp + j] = a[pp + j]
                a[pp + j] = t
            dr = -dr
            di = -di
        p = 2 * (k * n + k)
        pr = a[p]
        pi = a[p + 1]
        ndr = dr * pr - di * pi
        ndi = dr * pi + di * pr
        dr = ndr
        di = ndi
        d = pr * pr + pi * pi
        for i in range(k + 1, n):
            q = 2 * (i * n + k)
            br = a[q]
            bi = a[q + 1]
            fr = (br * pr + bi * pi) / d
            fi = (bi * pr - br * pi) / d
            for j in range(k + 1, n):
                u = 2 * (k * n + j)
                v = 2 * (i * n + j)
                ur = a[u]
                ui = a[u + 1]
                a[v] = a[v] - (fr * ur - fi * ui)
                a[v + 1] = a[v + 1] - (fr * ui + fi * ur)
    return dr, di


def jacobi(double[::1] a, Py_ssize_t n, double[::1] eigs,
           double off_tol, Py_ssize_t max_sweeps):
    # a is an n x n scratch buffer, destroyed in place; eigs receives the
    # unsorted diagonal. Returns (sweeps_used, converged_flag).
    cdef Py_ssize_t i, j, p, q, pp, qq, pq, qp, ip, iq, pi_, qi
    cdef Py_ssize_t sweeps = 0
    cdef int converged = 0
    cdef double hr, hi, tol2, off2, br, bi, b2, b, cr, ci
    cdef double app, aqq, tau, t, c, s, scr, sci, xr, xi, yr, yi
    for i in range(n):
        for j in range(i, n):
            p = 2 * (i * n + j)
            q = 2 * (j * n + i)
            hr = (a[p] + a[q]) * 0.5
            hi = (a[p + 1] - a[q + 1]) * 0.5
            a[q] = hr
            a[q + 1] = -hi
            a[p] = hr
            a[p + 1] = hi
    tol2 = off_tol * off_tol
    while True:
        off2 = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    p = 2 * (i * n + j)
                    off2 += a[p] * a[p] + a[p + 1] * a[p + 1]
        if off2 < tol2:
            converged = 1
            break
        if sweeps >= max_sweeps:
            break
        for pp in range(n - 1):
            for qq in range(pp + 1, n):
                pq = 2 * (pp * n + qq)
                br = a[pq]
                bi = a[pq + 1]
                b2 = br * br + bi * bi
                if b2 == 0.0:
                    continue
                b = sqrt(b2)
                cr = br / b
                ci = bi / b
                app = a[2 * (pp * n + pp)]
                aqq = a[2 * (qq * n + qq)]
                tau = (aqq - app) / (2.0 * b)
                if tau >= 0.0:
                    t = -1.0 / (tau + sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (-tau + sqrt(tau * tau + 1.0))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                scr = s * cr
                sci = s * ci
                for i in range(n):
                    if i == pp or i == qq:
                        continue
                    ip = 2 * (i * n + pp)
                    iq = 2 * (i * n + qq)
                    xr = a[ip]
                    xi = a[ip + 1]
                    yr = a[iq]
                    yi = a[iq + 1]
                    a[ip] = c * xr + (scr * yr + sci * yi)
                    a[ip + 1] = c * xi + (scr * yi - sci * yr)
                    a[iq] = c * yr - (scr * xr - sci * xi)
                    a[iq + 1] = c * yi - (scr * xi + sci * xr)
                    pi_ = 2 * (pp * n + i)
                    qi = 2 * (qq * n + i)
                    xr = a[pi_]
                    xi = a[pi_ + 1]
                    yr = a[qi]
                    yi = a[qi + 1]
                    a[pi_] = c * xr + (scr * yr - sci * yi)
                    a[pi_ + 1] = c * xi + (scr * yi + sci * yr)
                    a[qi] = c * yr - (scr * xr + sci * xi)
                    a[qi + 1] = c * yi - (scr * xi - sci * xr)
                a[2 * (pp * n + pp)] = app * c * c + 2.0 * b * c * s + aqq * s * s
                a[2 * (pp * n + pp) + 1] = 0.0
                a[2 * (qq * n + qq)] = app * s * s - 2.0 * b * c * s + aqq * c * c
                a[2 * (qq * n + qq) + 1] = 0.0
                a[pq] = 0.0
                a[pq + 1] = 0.0
                qp = 2 * (qq * n + pp)
                a[qp] = 0.0
                a[qp + 1] = 0.0
        sweeps += 1
    for i in range(n):
        eigs[i] = a[2 * (i * n + i)]
    return sweeps, converged
