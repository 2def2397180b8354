# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernels for boundary matrices.

Same interface as ``_kernels_py``.  Characteristic 0 uses fraction-free
(Bareiss) elimination in 64-bit integers and raises ``OverflowError`` if an
intermediate minor does not fit; callers then retry in pure Python.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef long long i64

cdef extern from *:
    """
    static int sb_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int sb_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int sb_mul_ovf(i64 a, i64 b, i64 *r) nogil
    int sb_sub_ovf(i64 a, i64 b, i64 *r) nogil


cdef i64 _inv_mod(i64 a, i64 p) nogil:
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


cdef void _swap_rows(i64 *a, Py_ssize_t cols, Py_ssize_t r1, Py_ssize_t r2) nogil:
    cdef Py_ssize_t c
    cdef i64 tmp
    if r1 == r2:
        return
    for c in range(cols):
        tmp = a[r1 * cols + c]
        a[r1 * cols + c] = a[r2 * cols + c]
        a[r2 * cols + c] = tmp


cdef Py_ssize_t _rank_mod_p(i64 *a, Py_ssize_t rows, Py_ssize_t cols, i64 p) nogil:
    cdef Py_ssize_t rank = 0, c, r, i, jj
    cdef i64 inv, factor, x
    for r in range(rows * cols):
        x = a[r] % p
        if x < 0:
            x += p
        a[r] = x
    for c in range(cols):
        if rank == rows:
            break
        r = rank
        while r < rows and a[r * cols + c] == 0:
            r += 1
        if r == rows:
            continue
        _swap_rows(a, cols, r, rank)
        inv = _inv_mod(a[rank * cols + c], p)
        for i in range(rank + 1, rows):
            factor = a[i * cols + c]
            if factor == 0:
                continue
            factor = (factor * inv) % p
            for jj in range(c, cols):
                x = (a[i * cols + jj] - factor * a[rank * cols + jj]) % p
                if x < 0:
                    x += p
                a[i * cols + jj] = x
        rank += 1
    return rank


cdef Py_ssize_t _rank_bareiss(i64 *a, Py_ssize_t rows, Py_ssize_t cols) nogil:
    """Returns -1 on 64-bit overflow."""
    cdef Py_ssize_t rank = 0, c, r, i, jj
    cdef i64 prev = 1, piv, aic, t1, t2, t3
    for c in range(cols):
        if rank == rows:
            break
        r = rank
        while r < rows and a[r * cols + c] == 0:
            r += 1
        if r == rows:
            continue
        _swap_rows(a, cols, r, rank)
        piv = a[rank * cols + c]
        for i in range(rank + 1, rows):
            aic = a[i * cols + c]
            for jj in range(c + 1, cols):
                if sb_mul_ovf(piv, a[i * cols + jj], &t1):
                    return -1
                if sb_mul_ovf(aic, a[rank * cols + jj], &t2):
                    return -1
                if sb_sub_ovf(t1, t2, &t3):
                    return -1
                a[i * cols + jj] = t3 // prev
            a[i * cols + c] = 0
        prev = piv
        rank += 1
    return rank


cdef Py_ssize_t _rank(i64 *a, Py_ssize_t rows, Py_ssize_t cols, i64 p) except -2:
    cdef Py_ssize_t rank
    with nogil:
        if p > 0:
            rank = _rank_mod_p(a, rows, cols, p)
        else:
            rank = _rank_bareiss(a, rows, cols)
    if rank < 0:
        raise OverflowError("Bareiss elimination left the 64-bit range")
    return rank


def matrix_rank(list matrix, long long p=0):
    """Rank of a dense integer matrix over F_p (``p`` prime) or Q (``p == 0``)."""
    cdef Py_ssize_t rows = len(matrix)
    if rows == 0:
        return 0
    cdef Py_ssize_t cols = len(matrix[0])
    if cols == 0:
        return 0
    cdef i64 *a = <i64 *> malloc(rows * cols * sizeof(i64))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c
    try:
        for r in range(rows):
            row = matrix[r]
            for c in range(cols):
                a[r * cols + c] = row[c]
        return _rank(a, rows, cols, p)
    finally:
        free(a)


def boundary_rank(list hi_faces, list lo_faces, long long p=0):
    """Rank of the simplicial boundary map from ``hi_faces`` to ``lo_faces``.

    Faces are vertex bitmasks; ``lo_faces`` must contain every codimension-one
    face of every face in ``hi_faces`` (the empty face is mask 0).
    """
    cdef Py_ssize_t rows = len(lo_faces), cols = len(hi_faces)
    if rows == 0 or cols == 0:
        return 0
    cdef dict index = {face: k for k, face in enumerate(lo_faces)}
    cdef i64 *a = <i64 *> malloc(rows * cols * sizeof(i64))
    if a == NULL:
        raise MemoryError()
    memset(a, 0, rows * cols * sizeof(i64))
    cdef Py_ssize_t c, pos
    cdef unsigned long long face, rest, bit
    try:
        for c in range(cols):
            face = hi_faces[c]
            rest = face
            pos = 0
            while rest:
                bit = rest & (~rest + 1)
                rest ^= bit
                a[<Py_ssize_t> index[face ^ bit] * cols + c] = -1 if pos & 1 else 1
                pos += 1
        return _rank(a, rows, cols, p)
    finally:
        free(a)
