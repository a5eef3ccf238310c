# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counterparts of ``dgakit._pykernels``."""
from fractions import Fraction
from math import gcd

from libc.stdlib cimport malloc, free


def mul_terms(dict a, dict b, odd):
    cdef Py_ssize_t n = len(odd)
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t i, p, q
    cdef int parity, later, dead
    cdef int *oddv
    cdef int *ea
    cdef int *eb
    cdef dict out = {}
    if na == 0 or nb == 0:
        return out
    keys_a = list(a)
    keys_b = list(b)
    vals_a = [a[k] for k in keys_a]
    vals_b = [b[k] for k in keys_b]
    oddv = <int *> malloc(n * sizeof(int) + 1)
    ea = <int *> malloc(na * n * sizeof(int) + 1)
    eb = <int *> malloc(nb * n * sizeof(int) + 1)
    try:
        for i in range(n):
            oddv[i] = 1 if odd[i] else 0
        for p in range(na):
            m = keys_a[p]
            for i in range(n):
                ea[p * n + i] = m[i]
        for q in range(nb):
            m = keys_b[q]
            for i in range(n):
                eb[q * n + i] = m[i]
        for p in range(na):
            c1 = vals_a[p]
            for q in range(nb):
                parity = 0
                later = 0
                dead = 0
                for i in range(n - 1, -1, -1):
                    if oddv[i]:
                        if eb[q * n + i]:
                            if ea[p * n + i]:
                                dead = 1
                                break
                            parity += later
                        if ea[p * n + i]:
                            later += 1
                if dead:
                    continue
                m = tuple([ea[p * n + i] + eb[q * n + i] for i in range(n)])
                c = c1 * vals_b[q]
                if parity & 1:
                    c = -c
                v = out.get(m)
                if v is None:
                    out[m] = c
                else:
                    v = v + c
                    if v:
                        out[m] = v
                    else:
                        del out[m]
    finally:
        free(oddv)
        free(ea)
        free(eb)
    return out


cdef list _primitive_int_row(row):
    den = 1
    for x in row:
        if x:
            den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in row]


def rref_rows(rows, Py_ssize_t ncols):
    cdef list work = []
    cdef list pivots = []
    cdef list prow, row, new
    cdef Py_ssize_t top = 0, col, r, piv, k, nrows
    for src in rows:
        row = _primitive_int_row(src)
        for x in row:
            if x:
                work.append(row)
                break
    nrows = len(work)
    for col in range(ncols):
        if top >= nrows:
            break
        piv = -1
        for r in range(top, nrows):
            if (<list> work[r])[col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != top:
            work.insert(top, work.pop(piv))
        prow = work[top]
        pv = prow[col]
        for r in range(nrows):
            if r == top:
                continue
            row = work[r]
            rv = row[col]
            if not rv:
                continue
            g = gcd(pv, rv)
            f1 = pv // g
            f2 = rv // g
            new = [f1 * row[k] - f2 * prow[k] for k in range(ncols)]
            h = 0
            for x in new:
                if x:
                    h = gcd(h, x)
                    if h == 1:
                        break
            if h > 1:
                new = [x // h for x in new]
            work[r] = new
        pivots.append(col)
        top += 1
    out = []
    for k in range(len(pivots)):
        row = work[k]
        pv = row[pivots[k]]
        out.append([Fraction(x, pv) for x in row])
    return out, pivots
