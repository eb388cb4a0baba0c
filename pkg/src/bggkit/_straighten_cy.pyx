# cython: language_level=3
"""Compiled PBW straightening kernel; twin of _straighten_py.

Same algorithm and cache semantics as the pure-Python module, with the
word scanning and splicing loops compiled.  Coefficients remain Python
ints (they are unbounded), so the speedup comes from loop and dict
overhead, not from native arithmetic.
"""

CACHE_BOUND = 8


cdef tuple _squash(tuple runs):
    cdef list out = []
    cdef Py_ssize_t idx, exp
    for idx, exp in runs:
        if exp == 0:
            continue
        if out and (<tuple>out[-1])[0] == idx:
            out[-1] = (idx, (<tuple>out[-1])[1] + exp)
        else:
            out.append((idx, exp))
    return tuple(out)


cdef class StraightenKernel:
    """Normal ordering for one fixed basis and commutator table."""

    cdef public Py_ssize_t dim
    cdef public dict table
    cdef dict _pair_cache
    cdef public str impl

    def __init__(self, dim, table):
        self.dim = int(dim)
        self.table = {pair: tuple(entries) for pair, entries in table.items()}
        self._pair_cache = {}
        self.impl = "cython"

    cdef tuple _runs_to_exps(self, tuple runs):
        cdef list exps = [0] * self.dim
        cdef Py_ssize_t idx, exp
        for idx, exp in runs:
            exps[idx] = <object>exps[idx] + exp
        return tuple(exps)

    cdef tuple _exps_to_runs(self, tuple exps):
        cdef list out = []
        cdef Py_ssize_t i
        for i in range(len(exps)):
            if exps[i]:
                out.append((i, exps[i]))
        return tuple(out)

    def normal_order_word(self, runs):
        """Straighten an arbitrary word; returns {monomial exps: int}."""
        cdef dict pending = {_squash(tuple(runs)): 1}
        cdef dict out = {}
        cdef tuple word, prefix, suffix, mono, new
        cdef object coef, acc, c
        cdef Py_ssize_t k, pos, hi, lo, a, b
        while pending:
            word, coef = pending.popitem()
            if coef == 0:
                continue
            k = -1
            for pos in range(len(word) - 1):
                if (<tuple>word[pos])[0] > (<tuple>word[pos + 1])[0]:
                    k = pos
                    break
            if k < 0:
                mono = self._runs_to_exps(word)
                acc = out.get(mono, 0) + coef
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
                continue
            hi = (<tuple>word[k])[0]
            a = (<tuple>word[k])[1]
            lo = (<tuple>word[k + 1])[0]
            b = (<tuple>word[k + 1])[1]
            prefix = word[:k]
            suffix = word[k + 2:]
            for mono, c in self.pair_product(hi, lo, a, b).items():
                new = _squash(prefix + self._exps_to_runs(mono) + suffix)
                acc = pending.get(new, 0) + coef * c
                if acc:
                    pending[new] = acc
                elif new in pending:
                    del pending[new]
        return out

    cpdef dict pair_product(self, Py_ssize_t hi, Py_ssize_t lo,
                            Py_ssize_t a, Py_ssize_t b):
        """Normal form of b_hi^a * b_lo^b for hi > lo (read-only result)."""
        cdef tuple key = (hi, lo, a, b)
        cdef object cached = self._pair_cache.get(key)
        if cached is not None:
            return <dict>cached
        cdef dict res = {}
        cdef list exps
        cdef tuple unit, word, mono, m2
        cdef object c, c2, acc
        cdef Py_ssize_t idx
        if a == 1 and b == 1:
            exps = [0] * self.dim
            exps[lo] = 1
            exps[hi] = exps[hi] + 1
            res[tuple(exps)] = 1
            for idx, c in self.table.get((hi, lo), ()):
                exps = [0] * self.dim
                exps[idx] = 1
                unit = tuple(exps)
                acc = res.get(unit, 0) + c
                if acc:
                    res[unit] = acc
                elif unit in res:
                    del res[unit]
        else:
            # peel one power of each factor: hi^a lo^b = hi^(a-1) (hi lo) lo^(b-1)
            for mono, c in self.pair_product(hi, lo, 1, 1).items():
                word = ((hi, a - 1),) + self._exps_to_runs(mono) + ((lo, b - 1),)
                for m2, c2 in self.normal_order_word(word).items():
                    acc = res.get(m2, 0) + c * c2
                    if acc:
                        res[m2] = acc
                    elif m2 in res:
                        del res[m2]
        if a <= CACHE_BOUND and b <= CACHE_BOUND:
            self._pair_cache[key] = res
        return res

    def multiply_monomials(self, exps_a, exps_b):
        """Normal form of X^A * X^B; returns {monomial exps: int}."""
        return self.normal_order_word(
            self._exps_to_runs(tuple(exps_a)) + self._exps_to_runs(tuple(exps_b)))
