"""Integer kernels and ranks by unimodular column operations."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def column_hermite(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Column-echelon form H = M U with U unimodular.

    Returns (H, U, r): the first r columns of H are the pivot columns and the
    remaining columns of U span the integer kernel of M.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    H = [list(map(int, row)) for row in M]
    U = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def colop(j: int, k: int, a: int, b: int, c: int, d: int) -> None:
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for X in (H, U):
            for row in X:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    r = 0
    for i in range(rows):
        if r == cols:
            break
        for k in range(r + 1, cols):
            b = H[i][k]
            if b == 0:
                continue
            a = H[i][r]
            g, x, y = _xgcd(a, b)
            colop(r, k, x, y, -b // g, a // g)
        if H[i][r] == 0:
            continue
        if H[i][r] < 0:
            colop(r, r, -1, 0, -1, 0)
        for k in range(r):
            f = H[i][k] // H[i][r]
            if f:
                colop(k, r, 1, -f, 0, 1)
        r += 1
    return H, U, r


def rank(M: Sequence[Sequence[int]]) -> int:
    if not M or not M[0]:
        return 0
    return column_hermite(M)[2]


def integer_kernel_basis(M: Sequence[Sequence[int]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Lattice basis of {u in Z^q : M u = 0}."""
    if not M:
        q = ncols or 0
        return [tuple(int(i == j) for i in range(q)) for j in range(q)]
    _, U, r = column_hermite(M)
    q = len(M[0])
    return [tuple(U[i][j] for i in range(q)) for j in range(r, q)]


def mat_vec(M: Sequence[Sequence[int]], u: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, u)) for row in M]


def size_reduce(basis: list[tuple[int, ...]], rounds: int = 4) -> list[tuple[int, ...]]:
    """Cheap pairwise reduction: replace b_i by b_i -+ b_j while the l1 norm drops.

    The lattice spanned never changes; shorter vectors give lower-degree
    lattice-basis binomials, which keeps later Groebner computations small.
    """
    basis = [list(b) for b in basis]

    def norm(v: list[int]) -> int:
        return sum(abs(x) for x in v)

    for _ in range(rounds):
        changed = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                for s in (1, -1):
                    cand = [x - s * y for x, y in zip(basis[i], basis[j])]
                    if norm(cand) < norm(basis[i]):
                        basis[i] = cand
                        changed = True
        if not changed:
            break
    return [tuple(b) for b in basis]
