"""Small exact linear algebra over whatever field the entries live in."""

from __future__ import annotations

from .field import field_of


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(a, b, c):
    """Determinant of the 3x3 matrix with rows a, b, c."""
    return dot(a, cross(b, c))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def transpose(m):
    return tuple(zip(*m))


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def adjugate3(m):
    """Classical adjoint; ``m @ adj(m) == det(m) * I``."""
    c0, c1, c2 = transpose(m)
    # rows of the adjugate are cross products of the columns
    return (cross(c1, c2), cross(c2, c0), cross(c0, c1))


def _lift(rows):
    """Rows as lists of field elements (bare ints promoted)."""
    f = field_of(*(x for row in rows for x in row))
    return f, [[f(x) if type(x) is int else x for x in row] for row in rows]


def row_reduce(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    _, m = _lift(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of the right kernel of ``rows`` as a list of tuples."""
    if ncols is None:
        ncols = len(rows[0])
    f, rows = _lift(rows)
    one, zero = f.one, f.zero
    m, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [zero] * ncols
        v[c] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][c]
        basis.append(tuple(v))
    return basis
