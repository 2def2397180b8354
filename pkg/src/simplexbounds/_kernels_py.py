"""Pure-Python rank kernels; the fallback when the compiled module is missing."""

from __future__ import annotations


def _rank_mod_p(a: list[list[int]], p: int) -> int:
    rows, cols = len(a), len(a[0])
    a = [[x % p for x in row] for row in a]
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        r = next((r for r in range(rank, rows) if a[r][c]), None)
        if r is None:
            continue
        a[rank], a[r] = a[r], a[rank]
        pivot_row = a[rank]
        inv = pow(pivot_row[c], -1, p)
        for i in range(rank + 1, rows):
            row = a[i]
            if row[c]:
                factor = row[c] * inv % p
                for jj in range(c, cols):
                    row[jj] = (row[jj] - factor * pivot_row[jj]) % p
        rank += 1
    return rank


def _rank_bareiss(a: list[list[int]]) -> int:
    rows, cols = len(a), len(a[0])
    a = [list(row) for row in a]
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        r = next((r for r in range(rank, rows) if a[r][c]), None)
        if r is None:
            continue
        a[rank], a[r] = a[r], a[rank]
        pivot_row = a[rank]
        piv = pivot_row[c]
        for i in range(rank + 1, rows):
            row = a[i]
            aic = row[c]
            for jj in range(c + 1, cols):
                row[jj] = (piv * row[jj] - aic * pivot_row[jj]) // prev
            row[c] = 0
        prev = piv
        rank += 1
    return rank


def matrix_rank(matrix: list[list[int]], p: int = 0) -> int:
    """Rank of a dense integer matrix over F_p (``p`` prime) or Q (``p == 0``)."""
    if not matrix or not matrix[0]:
        return 0
    return _rank_mod_p(matrix, p) if p > 0 else _rank_bareiss(matrix)


def boundary_matrix(hi_faces: list[int], lo_faces: list[int]) -> list[list[int]]:
    index = {face: k for k, face in enumerate(lo_faces)}
    a = [[0] * len(hi_faces) for _ in lo_faces]
    for c, face in enumerate(hi_faces):
        rest = face
        pos = 0
        while rest:
            bit = rest & -rest
            rest ^= bit
            a[index[face ^ bit]][c] = -1 if pos & 1 else 1
            pos += 1
    return a


def boundary_rank(hi_faces: list[int], lo_faces: list[int], p: int = 0) -> int:
    """Rank of the simplicial boundary map between two lists of bitmask faces."""
    if not hi_faces or not lo_faces:
        return 0
    return matrix_rank(boundary_matrix(hi_faces, lo_faces), p)
