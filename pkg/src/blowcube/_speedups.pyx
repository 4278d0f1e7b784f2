# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel on packed-exponent dictionaries.

Mirror of blowcube._kernel_py; see that module for the representation
contract.  Coefficients and keys stay Python ints (they are arbitrary
precision), the win here is removing interpreter overhead from the
double loop, which dominates every downstream computation.
"""

BACKEND = "cython"


def mul_packed(dict a, dict b):
    """Product of two packed term dicts. Zero coefficients are dropped."""
    cdef dict out = {}
    cdef dict big = a
    cdef dict small = b
    if len(a) < len(b):
        big = b
        small = a
    cdef list items = list(small.items())
    cdef Py_ssize_t n = len(items)
    cdef Py_ssize_t i
    cdef tuple it
    for ka, ca in big.items():
        for i in range(n):
            it = <tuple> items[i]
            k = ka + <object> it[0]
            cb = <object> it[1]
            prev = out.get(k)
            if prev is None:
                out[k] = ca * cb
            else:
                out[k] = prev + ca * cb
    cdef dict res = {}
    for k, v in out.items():
        if v:
            res[k] = v
    return res


def add_scaled_packed(dict a, dict b, s):
    """a + s*b on packed term dicts."""
    if s == 0:
        return dict(a)
    cdef dict out = dict(a)
    for k, c in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = s * c
        else:
            v = prev + s * c
            if v:
                out[k] = v
            else:
                del out[k]
    return out
