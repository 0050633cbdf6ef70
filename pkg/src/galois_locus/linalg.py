"""Gaussian elimination over GF(p^k) on matrices of element codes."""

from __future__ import annotations

from .fields import FieldSpec


def rref(F: FieldSpec, rows: list[list[int]], columns: list[int] | None = None):
    """Reduced row echelon form; returns (matrix, pivot columns).

    ``columns`` fixes the order in which columns are tried as pivots.
    """
    A = [list(r) for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    order = list(range(ncols)) if columns is None else list(columns)
    pivots = []
    r = 0
    for c in order:
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(F: FieldSpec, rows: list[list[int]]) -> int:
    return len(rref(F, rows)[1])


def kernel(F: FieldSpec, rows: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of the right null space, one vector per free column (free entry 1)."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = F.neg(R[i][f])
        basis.append(v)
    return basis


def det3(F: FieldSpec, M) -> int:
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    m, s = F.mul, F.sub
    t1 = m(a, s(m(e, i), m(f, h)))
    t2 = m(b, s(m(d, i), m(f, g)))
    t3 = m(c, s(m(d, h), m(e, g)))
    return F.add(s(t1, t2), t3)


def inverse3(F: FieldSpec, M):
    det = det3(F, M)
    if not det:
        raise ZeroDivisionError("singular 3x3 matrix")
    m, s = F.mul, F.sub
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [y for y in range(3) if y != j]
            minor = s(m(M[r[0]][c[0]], M[r[1]][c[1]]), m(M[r[0]][c[1]], M[r[1]][c[0]]))
            cof[i][j] = minor if (i + j) % 2 == 0 else F.neg(minor)
    dinv = F.inv(det)
    return [[m(cof[j][i], dinv) for j in range(3)] for i in range(3)]


def matmul(F: FieldSpec, A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                if A[i][t] and B[t][j]:
                    acc = F.add(acc, F.mul(A[i][t], B[t][j]))
            out[i][j] = acc
    return out


def matvec(F: FieldSpec, A, v):
    out = []
    for row in A:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = F.add(acc, F.mul(a, x))
        out.append(acc)
    return out


def cross(F: FieldSpec, u, v):
    m, s = F.mul, F.sub
    return [s(m(u[1], v[2]), m(u[2], v[1])),
            s(m(u[2], v[0]), m(u[0], v[2])),
            s(m(u[0], v[1]), m(u[1], v[0]))]


def dot(F: FieldSpec, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def normalize(F: FieldSpec, v) -> tuple[int, ...]:
    """Scale so the first nonzero entry is 1."""
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise ValueError("zero vector has no projective normalization")
