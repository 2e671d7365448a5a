# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse term-list kernels; same API as ``_kernels_py``."""


def axpy(list hk, list hc, list gk, list gc, object shift, long long c, long long p):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t nh = len(hk), ng = len(gk)
    cdef long long v
    cdef list ok = []
    cdef list oc = []
    cdef object a, b
    if c == 0 or ng == 0:
        return list(hk), list(hc)
    while i < nh and j < ng:
        a = hk[i]
        b = gk[j] + shift
        if a < b:
            ok.append(a)
            oc.append(hc[i])
            i += 1
        elif b < a:
            ok.append(b)
            oc.append((<long long>gc[j]) * c % p)
            j += 1
        else:
            v = ((<long long>hc[i]) + (<long long>gc[j]) * c) % p
            if v:
                ok.append(a)
                oc.append(v)
            i += 1
            j += 1
    while i < nh:
        ok.append(hk[i])
        oc.append(hc[i])
        i += 1
    while j < ng:
        ok.append(gk[j] + shift)
        oc.append((<long long>gc[j]) * c % p)
        j += 1
    return ok, oc


def mul(list fk, list fc, list gk, list gc, long long p):
    cdef dict acc = {}
    cdef Py_ssize_t i, j, nf, ng
    cdef long long ca, v
    cdef object k, a
    if len(fk) > len(gk):
        fk, fc, gk, gc = gk, gc, fk, fc
    nf = len(fk)
    ng = len(gk)
    for i in range(nf):
        a = fk[i]
        ca = fc[i]
        for j in range(ng):
            k = a + gk[j]
            v = acc.get(k, 0)
            acc[k] = (v + ca * (<long long>gc[j])) % p
    keys = sorted([k for k, v in acc.items() if v])
    return keys, [acc[k] for k in keys]


def find_reducer(object lead, list leads, list ecarts, object guard, object compmask):
    cdef Py_ssize_t idx, n = len(leads)
    cdef Py_ssize_t best = -1
    cdef long best_e = 0, e
    cdef object m
    for idx in range(n):
        m = leads[idx]
        if (m ^ lead) & compmask:
            continue
        if ((lead + guard - m) & guard) != guard:
            continue
        e = ecarts[idx]
        if best < 0 or e < best_e:
            best = idx
            best_e = e
            if e == 0:
                break
    return best


def max_field(list keys, int shift, object mask):
    cdef long best = -1, v
    cdef object k
    for k in keys:
        v = (k >> shift) & mask
        if v > best:
            best = v
    return best
