# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ordtop.kernels.pure (same contracts, C-speed loops).

Masks are limited to 64 bits here; ordtop.kernels only dispatches to this
backend for ground sets that fit.
"""

from libc.stdlib cimport calloc, free, malloc, realloc

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define ORD_POPCNT(x) __builtin_popcountll(x)
    #  define ORD_CTZ(x) __builtin_ctzll(x)
    #else
    static int ORD_POPCNT(unsigned long long x) { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static int ORD_CTZ(unsigned long long x) { int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int ORD_POPCNT(u64 x) nogil
    int ORD_CTZ(u64 x) nogil


cdef u64* _rows_to_c(object rows, int* n_out) except NULL:
    cdef int n = len(rows)
    cdef u64* r = <u64*> malloc(n * sizeof(u64) if n else sizeof(u64))
    if r == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        r[i] = <u64> rows[i]
    n_out[0] = n
    return r


def transitive_closure(rows):
    cdef int n, i, k
    cdef u64* r = _rows_to_c(rows, &n)
    cdef u64 bit
    try:
        for k in range(n):
            bit = (<u64> 1) << k
            for i in range(n):
                if r[i] & bit:
                    r[i] |= r[k]
        return [r[i] for i in range(n)]
    finally:
        free(r)


def transitivity_violation(rows):
    cdef int n, i, j, k
    cdef u64* r = _rows_to_c(rows, &n)
    cdef u64 m, extra
    try:
        for i in range(n):
            m = r[i]
            while m:
                j = ORD_CTZ(m)
                m &= m - 1
                extra = r[j] & ~r[i]
                if extra:
                    k = ORD_CTZ(extra)
                    return (i, j, k)
        return None
    finally:
        free(r)


def close_family(members, ground):
    cdef u64 g = <u64> ground
    cdef Py_ssize_t cap = 64
    cdef u64* fam = <u64*> malloc(cap * sizeof(u64))
    if fam == NULL:
        raise MemoryError()
    # membership table over all subsets of the ground mask
    cdef unsigned char* seen = <unsigned char*> calloc(g + 1, 1)
    if seen == NULL:
        free(fam)
        raise MemoryError()
    cdef Py_ssize_t count = 0, i = 0, j
    cdef u64 m, o, val
    cdef u64* nfam
    cdef int which
    try:
        fam[0] = 0
        fam[1] = g
        seen[0] = 1
        seen[g] = 1
        count = 2
        for mem in members:
            m = <u64> mem
            if not seen[m]:
                seen[m] = 1
                if count == cap:
                    nfam = <u64*> realloc(fam, 2 * cap * sizeof(u64))
                    if nfam == NULL:
                        raise MemoryError()
                    fam = nfam
                    cap *= 2
                fam[count] = m
                count += 1
        while i < count:
            m = fam[i]
            for j in range(i):
                o = fam[j]
                for which in range(2):
                    val = (m | o) if which == 0 else (m & o)
                    if not seen[val]:
                        seen[val] = 1
                        if count == cap:
                            nfam = <u64*> realloc(fam, 2 * cap * sizeof(u64))
                            if nfam == NULL:
                                raise MemoryError()
                            fam = nfam
                            cap *= 2
                        fam[count] = val
                        count += 1
            i += 1
        out = [fam[j] for j in range(count)]
        out.sort()
        return out
    finally:
        free(fam)
        free(seen)


def up_sets(rows):
    cdef int n, i
    cdef u64* r = _rows_to_c(rows, &n)
    cdef u64 mask, m, end = (<u64> 1) << n
    cdef bint ok
    out = []
    try:
        mask = 0
        while mask < end:
            m = mask
            ok = True
            while m:
                i = ORD_CTZ(m)
                m &= m - 1
                if r[i] & ~mask:
                    ok = False
                    break
            if ok:
                out.append(mask)
            mask += 1
        return out
    finally:
        free(r)


def directed_sups(rows):
    cdef int n, i, j, a, b, m0
    cdef u64* r = _rows_to_c(rows, &n)
    cdef u64 full = ((<u64> 1) << n) - 1
    cdef u64* cols = <u64*> calloc(n if n else 1, sizeof(u64))
    cdef u64* strict_below = <u64*> malloc((n if n else 1) * sizeof(u64))
    cdef u64* eq_class = <u64*> malloc((n if n else 1) * sizeof(u64))
    cdef int* elems = <int*> malloc((n if n else 1) * sizeof(int))
    cdef u64 d, m, ub, minima, end = (<u64> 1) << n
    cdef int ecount
    cdef bint directed
    out = []
    if cols == NULL or strict_below == NULL or eq_class == NULL or elems == NULL:
        free(r)
        free(cols)
        free(strict_below)
        free(eq_class)
        free(elems)
        raise MemoryError()
    try:
        for i in range(n):
            m = r[i]
            while m:
                j = ORD_CTZ(m)
                m &= m - 1
                cols[j] |= (<u64> 1) << i
        for i in range(n):
            strict_below[i] = cols[i] & ~r[i]
            eq_class[i] = cols[i] & r[i]
        d = 1
        while d < end:
            ecount = 0
            m = d
            while m:
                elems[ecount] = ORD_CTZ(m)
                ecount += 1
                m &= m - 1
            directed = True
            for a in range(ecount):
                for b in range(a + 1, ecount):
                    if not (r[elems[a]] & r[elems[b]] & d):
                        directed = False
                        break
                if not directed:
                    break
            if directed:
                ub = full
                for a in range(ecount):
                    ub &= r[elems[a]]
                if ub:
                    minima = 0
                    m = ub
                    while m:
                        i = ORD_CTZ(m)
                        m &= m - 1
                        if not (strict_below[i] & ub):
                            minima |= (<u64> 1) << i
                    m0 = ORD_CTZ(minima)
                    if not (minima & ~eq_class[m0]):
                        out.append((d, eq_class[m0]))
            d += 1
        return out
    finally:
        free(r)
        free(cols)
        free(strict_below)
        free(eq_class)
        free(elems)


def scott_opens(rows):
    pairs = directed_sups(rows)
    ups = up_sets(rows)
    cdef Py_ssize_t np = len(pairs)
    cdef u64* dmask = <u64*> malloc((np if np else 1) * sizeof(u64))
    cdef u64* smask = <u64*> malloc((np if np else 1) * sizeof(u64))
    if dmask == NULL or smask == NULL:
        free(dmask)
        free(smask)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef u64 u
    cdef bint ok
    out = []
    try:
        for i in range(np):
            dmask[i] = <u64> pairs[i][0]
            smask[i] = <u64> pairs[i][1]
        for uo in ups:
            u = <u64> uo
            ok = True
            for i in range(np):
                if (smask[i] & u) and not (dmask[i] & u):
                    ok = False
                    break
            if ok:
                out.append(uo)
        return out
    finally:
        free(dmask)
        free(smask)


cdef void _antichain_dfs(u64 cand, u64 cur_mask, int cur_size,
                         u64* incomp, u64* best_mask, int* best_size) nogil:
    cdef int v
    if cur_size + ORD_POPCNT(cand) <= best_size[0]:
        return
    if not cand:
        best_size[0] = cur_size
        best_mask[0] = cur_mask
        return
    v = ORD_CTZ(cand)
    _antichain_dfs(cand & incomp[v], cur_mask | ((<u64> 1) << v), cur_size + 1,
                   incomp, best_mask, best_size)
    _antichain_dfs(cand & ~((<u64> 1) << v), cur_mask, cur_size,
                   incomp, best_mask, best_size)


def max_antichain(rows):
    cdef int n, i, j
    cdef u64* r = _rows_to_c(rows, &n)
    if n == 0:
        free(r)
        return 0
    cdef u64 full = ((<u64> 1) << n) - 1
    cdef u64* cols = <u64*> calloc(n, sizeof(u64))
    cdef u64* incomp = <u64*> malloc(n * sizeof(u64))
    cdef u64 m, best_mask = 0
    cdef int best_size = 0
    if cols == NULL or incomp == NULL:
        free(r)
        free(cols)
        free(incomp)
        raise MemoryError()
    try:
        for i in range(n):
            m = r[i]
            while m:
                j = ORD_CTZ(m)
                m &= m - 1
                cols[j] |= (<u64> 1) << i
        for i in range(n):
            incomp[i] = ~(r[i] | cols[i]) & full
        _antichain_dfs(full, 0, 0, incomp, &best_mask, &best_size)
        return best_mask
    finally:
        free(r)
        free(cols)
        free(incomp)
