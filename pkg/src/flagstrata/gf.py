"""Dense linear algebra over the prime fields F_2 and F_3.

Vectors are tuples of ints in range(q); matrices are tuples of row vectors.
Everything is tiny (dimension <= 5), so plain Python arithmetic is used.
"""

from __future__ import annotations

from itertools import product

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(m: Matrix, v: Vector, q: int) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) % q for row in m)


def mat_mul(a: Matrix, b: Matrix, q: int) -> Matrix:
    n = len(b[0])
    return tuple(
        tuple(sum(ra[k] * b[k][j] for k in range(len(b))) % q for j in range(n))
        for ra in a
    )


def rref(rows, q: int) -> Matrix:
    """Reduced row echelon form with zero rows dropped; canonical per subspace."""
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivot_row = 0
    for col in range(ncols):
        src = next((r for r in range(pivot_row, len(mat)) if mat[r][col] % q), None)
        if src is None:
            continue
        mat[pivot_row], mat[src] = mat[src], mat[pivot_row]
        inv = pow(mat[pivot_row][col], q - 2, q) if q > 2 else 1
        mat[pivot_row] = [(x * inv) % q for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] % q:
                f = mat[r][col] % q
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(row) for row in mat[:pivot_row] if any(row))


def in_span(rows: Matrix, v: Vector, q: int) -> bool:
    """Whether v lies in the row space of an RREF matrix."""
    vec = list(v)
    for row in rows:
        col = next(j for j, x in enumerate(row) if x)
        if vec[col] % q:
            f = vec[col] % q
            vec = [(x - f * y) % q for x, y in zip(vec, row)]
    return not any(x % q for x in vec)


def all_vectors(n: int, q: int):
    return product(range(q), repeat=n)


def nullspace_basis(rows, q: int) -> list[Vector]:
    """Basis of the right nullspace of a matrix given as a list of rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    red = rref(rows, q)
    pivots = [next(j for j, x in enumerate(row) if x) for row in red]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for row, p in zip(red, pivots):
            vec[p] = (-row[f]) % q
        basis.append(tuple(vec))
    return basis


def commutant_basis(t: Matrix, q: int) -> list[Matrix]:
    """Basis of the algebra of n x n matrices commuting with t over F_q."""
    n = len(t)
    system = []
    # linear conditions on M flattened row-major: (M t - t M)[i][j] = 0
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[i * n + k] = (row[i * n + k] + t[k][j]) % q
                row[k * n + j] = (row[k * n + j] - t[i][k]) % q
            system.append(tuple(row))
    flat = nullspace_basis(system, q)
    return [tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n)) for v in flat]
