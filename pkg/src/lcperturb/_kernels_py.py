"""Pure-Python sparse term-list kernels.

Terms are two parallel lists: packed monomial keys in ascending order (which is
descending in the monomial ordering) and coefficients in [0, p).  The compiled
module ``_kernels`` exposes the same functions with the same signatures.
"""


def axpy(hk, hc, gk, gc, shift, c, p):
    """Return h + c * x^shift * g, merged and with zero terms dropped."""
    if c == 0 or not gk:
        return list(hk), list(hc)
    ok = []
    oc = []
    i = j = 0
    nh = len(hk)
    ng = len(gk)
    while i < nh and j < ng:
        a = hk[i]
        b = gk[j] + shift
        if a < b:
            ok.append(a)
            oc.append(hc[i])
            i += 1
        elif b < a:
            ok.append(b)
            oc.append(gc[j] * c % p)
            j += 1
        else:
            v = (hc[i] + gc[j] * c) % p
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
        oc.append(gc[j] * c % p)
        j += 1
    return ok, oc


def mul(fk, fc, gk, gc, p):
    """Return the product f * g of two term lists."""
    if len(fk) > len(gk):
        fk, fc, gk, gc = gk, gc, fk, fc
    acc = {}
    get = acc.get
    for a, ca in zip(fk, fc):
        for b, cb in zip(gk, gc):
            k = a + b
            acc[k] = (get(k, 0) + ca * cb) % p
    keys = sorted(k for k, v in acc.items() if v)
    return keys, [acc[k] for k in keys]


def find_reducer(lead, leads, ecarts, guard, compmask):
    """Index of the minimal-ecart entry of ``leads`` dividing ``lead``, or -1."""
    best = -1
    best_e = 0
    for idx in range(len(leads)):
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


def max_field(keys, shift, mask):
    """Largest value of the bit field ``(key >> shift) & mask`` over ``keys``."""
    best = -1
    for k in keys:
        v = (k >> shift) & mask
        if v > best:
            best = v
    return best
