# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled common-zero scan over F_p^3; same contract as ``_scan_py.common_zeros``."""

from libc.stdlib cimport malloc, free


def common_zeros(polys, long long prime):
    cdef int npoly = len(polys)
    if npoly == 0:
        return [(p, q, r) for p in range(prime) for q in range(prime) for r in range(prime)]
    cdef int nterms_total = 0
    cdef int maxdeg = 0
    cdef int maxr = 0
    for terms in polys:
        nterms_total += len(terms)
        for i, j, k, c in terms:
            maxdeg = max(maxdeg, i, j, k)
            maxr = max(maxr, k)
    cdef int *ti = <int *> malloc(nterms_total * sizeof(int))
    cdef int *tj = <int *> malloc(nterms_total * sizeof(int))
    cdef int *tk = <int *> malloc(nterms_total * sizeof(int))
    cdef long long *tc = <long long *> malloc(nterms_total * sizeof(long long))
    cdef int *start = <int *> malloc((npoly + 1) * sizeof(int))
    cdef long long *pw = <long long *> malloc(prime * (maxdeg + 1) * sizeof(long long))
    cdef long long *uni = <long long *> malloc(npoly * (maxr + 1) * sizeof(long long))
    cdef int n = 0, a, t, e, d
    cdef long long p, q, r, v, acc
    cdef bint ok
    out = []
    try:
        for a in range(npoly):
            start[a] = n
            for i, j, k, c in polys[a]:
                ti[n] = i
                tj[n] = j
                tk[n] = k
                tc[n] = c % prime
                n += 1
        start[npoly] = n
        for v in range(prime):
            acc = 1
            for e in range(maxdeg + 1):
                pw[v * (maxdeg + 1) + e] = acc
                acc = (acc * v) % prime
        for p in range(prime):
            for q in range(prime):
                for a in range(npoly):
                    for d in range(maxr + 1):
                        uni[a * (maxr + 1) + d] = 0
                    for t in range(start[a], start[a + 1]):
                        acc = tc[t] * pw[p * (maxdeg + 1) + ti[t]] % prime
                        acc = acc * pw[q * (maxdeg + 1) + tj[t]] % prime
                        uni[a * (maxr + 1) + tk[t]] = (uni[a * (maxr + 1) + tk[t]] + acc) % prime
                for r in range(prime):
                    ok = True
                    for a in range(npoly):
                        acc = 0
                        for d in range(maxr, -1, -1):
                            acc = (acc * r + uni[a * (maxr + 1) + d]) % prime
                        if acc != 0:
                            ok = False
                            break
                    if ok:
                        out.append((p, q, r))
    finally:
        free(ti); free(tj); free(tk); free(tc); free(start); free(pw); free(uni)
    return out
