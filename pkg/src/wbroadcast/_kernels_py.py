"""Pure-Python numeric kernels on interleaved [re, im] double buffers.

Mirror of the compiled backend: every function here has a twin in
_kernels_c with the same operation order and the same expression
shapes, so the two backends produce bit-identical doubles. Complex
arithmetic is therefore spelled out on real components; entry (i, j)
of an n-column matrix lives at buffer offset 2*(i*n + j).
"""

import math

BACKEND_NAME = "pure"


def kron(a, ra, ca, b, rb, cb, out):
    rc = ca * cb
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


def matmul(a, ra, ca, b, cb, out):
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


def dagger(a, ra, ca, out):
    for i in range(ra):
        for j in range(ca):
            p = 2 * (i * ca + j)
            o = 2 * (j * ra + i)
            out[o] = a[p]
            out[o + 1] = -a[p + 1]


def add(a, b, n, out):
    for k in range(2 * n):
        out[k] = a[k] + b[k]


def scale(a, sr, si, n, out):
    for k in range(n):
        p = 2 * k
        ar = a[p]
        ai = a[p + 1]
        out[p] = ar * sr - ai * si
        out[p + 1] = ar * si + ai * sr


def trace(a, n):
    tr = 0.0
    ti = 0.0
    for i in range(n):
        p = 2 * (i * n + i)
        tr += a[p]
        ti += a[p + 1]
    return tr, ti


def vec_norm2(v, n):
    s = 0.0
    for k in range(n):
        p = 2 * k
        s += v[p] * v[p] + v[p + 1] * v[p + 1]
    return s


def frob_dist(a, b, n):
    s = 0.0
    for k in range(n):
        p = 2 * k
        dr = a[p] - b[p]
        di = a[p + 1] - b[p + 1]
        s += dr * dr + di * di
    return math.sqrt(s)


def outer_conj(v, n, out):
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


def herm_defect(a, n):
    best = -1.0
    bi = 0
    bj = 0
    for i in range(n):
        for j in range(i, n):
            p = 2 * (i * n + j)
            q = 2 * (j * n + i)
            dr = a[p] - a[q]
            di = a[p + 1] + a[q + 1]
            m = math.sqrt(dr * dr + di * di)
            if m > best:
                best = m
                bi = i
                bj = j
    return best, bi, bj


def ptranspose(a, n, mask, out):
    inv = (n - 1) ^ mask
    for r in range(n):
        for c in range(n):
            sr = (r & inv) | (c & mask)
            sc = (c & inv) | (r & mask)
            p = 2 * (sr * n + sc)
            o = 2 * (r * n + c)
            out[o] = a[p]
            out[o + 1] = a[p + 1]


def ptrace(a, n, idx, kd, dd, out):
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


def lu_det(a, n, tol2):
    # a is an n x n scratch buffer, destroyed in place.
    dr = 1.0
    di = 0.0
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


def jacobi(a, n, eigs, off_tol, max_sweeps):
    # a is an n x n scratch buffer, destroyed in place; eigs receives the
    # unsorted diagonal. Returns (sweeps_used, converged_flag).
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
    sweeps = 0
    converged = 0
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
                b = math.sqrt(b2)
                cr = br / b
                ci = bi / b
                app = a[2 * (pp * n + pp)]
                aqq = a[2 * (qq * n + qq)]
                tau = (aqq - app) / (2.0 * b)
                if tau >= 0.0:
                    t = -1.0 / (tau + math.sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (-tau + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
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
