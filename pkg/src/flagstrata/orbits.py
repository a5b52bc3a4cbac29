"""Orbit counts of a block subgroup on complete flags over a small finite field.

The classifying pairs (w, J) with high points inside J and low points outside
index the orbits of GL_d x GL_{d'} on complete flags in d + d' dimensions;
the brute-force side computes orbits purely by generator closure, never by
invariants, so the two counts are genuinely independent.
"""

from __future__ import annotations

from itertools import combinations

from . import gf
from .strata import Involution

Flag = tuple[gf.Matrix, ...]

ORBIT_LIMIT = {2: 4, 3: 3}


def enumerate_involutions(n: int, max_pairs: int | None = None) -> list[Involution]:
    """All involutions of {1..n} with at most max_pairs two-cycles."""
    cap = n // 2 if max_pairs is None else min(max_pairs, n // 2)
    out: list[Involution] = []

    def build(free: tuple[int, ...], pairs_left: int, acc):
        if not free:
            mapping = list(range(1, n + 1))
            for a, b in acc:
                mapping[a - 1], mapping[b - 1] = b, a
            out.append(Involution(mapping))
            return
        head, rest = free[0], free[1:]
        build(rest, pairs_left, acc)
        if pairs_left:
            for k, partner in enumerate(rest):
                build(rest[:k] + rest[k + 1 :], pairs_left - 1, acc + [(head, partner)])

    build(tuple(range(1, n + 1)), cap, [])
    return sorted(out)


def classifying_pairs(d: int, dp: int) -> list[tuple[Involution, tuple[int, ...]]]:
    """All (w, J) with |J| = d, Hi(w) inside J and Lo(w) disjoint from J."""
    n = d + dp
    out = []
    for w in enumerate_involutions(n, max_pairs=min(d, dp)):
        hi, lo = w.hi, w.lo
        if len(hi) > d:
            continue
        room = sorted(set(range(1, n + 1)) - hi - lo)
        for extra in combinations(room, d - len(hi)):
            out.append((w, tuple(sorted(hi | set(extra)))))
    return sorted(out, key=lambda p: (p[0].mapping, p[1]))


def dual_classifying_pairs(d: int, dp: int) -> list[tuple[Involution, tuple[int, ...]]]:
    """All (w, J) with |J| = d, Lo(w) inside J and Hi(w) disjoint from J."""
    n = d + dp
    out = []
    for w in enumerate_involutions(n, max_pairs=min(d, dp)):
        hi, lo = w.hi, w.lo
        if len(lo) > d:
            continue
        room = sorted(set(range(1, n + 1)) - hi - lo)
        for extra in combinations(room, d - len(lo)):
            out.append((w, tuple(sorted(lo | set(extra)))))
    return sorted(out, key=lambda p: (p[0].mapping, p[1]))


# ---------------------------------------------------------------------------
# flags over F_q


def all_flags(n: int, q: int) -> list[Flag]:
    """Every complete flag in F_q^n, each subspace in canonical echelon form."""
    flags: list[Flag] = []

    def extend(chain: tuple[gf.Matrix, ...]):
        k = len(chain)
        if k == n:
            flags.append(chain)
            return
        current = chain[-1] if chain else ()
        seen = set()
        for v in gf.all_vectors(n, q):
            if not any(v) or gf.in_span(current, v, q):
                continue
            bigger = gf.rref(current + (v,), q)
            if bigger not in seen:
                seen.add(bigger)
                extend(chain + (bigger,))

    extend(())
    return flags


def flag_total(n: int, q: int) -> int:
    """Number of complete flags, the q-factorial [n]_q!."""
    total = 1
    for i in range(1, n + 1):
        total *= (q**i - 1) // (q - 1)
    return total


def block_group_generators(d: int, dp: int, q: int) -> list[gf.Matrix]:
    """Generators of GL_d x GL_{d'} inside GL_{d+d'}(F_q).

    Transvections within each block generate the special linear parts; one
    diagonal element per block with a single primitive-root entry fills in
    the determinants.
    """
    n = d + dp
    blocks = [range(d), range(d, n)]
    gens: list[gf.Matrix] = []
    for block in blocks:
        for a in block:
            for b in block:
                if a == b:
                    continue
                mat = [list(row) for row in gf.identity(n)]
                mat[a][b] = 1
                gens.append(tuple(tuple(r) for r in mat))
        if q > 2 and len(block) > 0:
            mat = [list(row) for row in gf.identity(n)]
            mat[block[0]][block[0]] = q - 1  # q-1 generates the units of F_2, F_3
            gens.append(tuple(tuple(r) for r in mat))
    return gens


def _apply(matrix: gf.Matrix, flag: Flag, q: int) -> Flag:
    return tuple(
        gf.rref(tuple(gf.mat_vec(matrix, row, q) for row in sub), q) for sub in flag
    )


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return out


def orbit_decomposition(d: int, dp: int, q: int) -> list[list[Flag]]:
    """Orbits of the block subgroup on complete flags, by union-find closure."""
    if q not in ORBIT_LIMIT:
        raise ValueError("only q = 2 and q = 3 are supported")
    n = d + dp
    if n > ORBIT_LIMIT[q]:
        raise ValueError(f"orbit enumeration capped at dimension {ORBIT_LIMIT[q]} for q={q}")
    flags = all_flags(n, q)
    index = {flag: i for i, flag in enumerate(flags)}
    uf = UnionFind(len(flags))
    gens = block_group_generators(d, dp, q)
    for flag, i in index.items():
        for g in gens:
            uf.union(i, index[_apply(g, flag, q)])
    return [[flags[i] for i in members] for members in uf.groups().values()]


def k_orbits(d: int, dp: int, q: int) -> int:
    return len(orbit_decomposition(d, dp, q))


def verify_counts(d: int, dp: int, q: int) -> bool:
    """Orbit count must match both classifying-pair counts."""
    expected = len(classifying_pairs(d, dp))
    return k_orbits(d, dp, q) == expected == len(dual_classifying_pairs(d, dp))


def pair_to_json(w: Involution, j: tuple[int, ...]) -> dict:
    return {"w": w.cycle_notation(), "J": list(j)}
