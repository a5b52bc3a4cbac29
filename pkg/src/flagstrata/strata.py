"""Involution combinatorics of the pair stratification on {1..d+d'}.

A pairing splits I = {1..d+d'} into d two-element blocks and d'-d singletons;
pairings index the irreducible pieces of the stratification and the basis of
the signed induced representation realized here.  Permutations are tuples p
of length n with p[i-1] = image of i.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

Perm = tuple[int, ...]
Pairing = tuple[tuple[int, ...], ...]


class Involution:
    """A self-inverse permutation of {1..n} with its high/low point structure."""

    __slots__ = ("n", "mapping")

    def __init__(self, mapping):
        self.mapping = tuple(mapping)
        self.n = len(self.mapping)
        if sorted(self.mapping) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.mapping}")
        for i in range(1, self.n + 1):
            if self.mapping[self.mapping[i - 1] - 1] != i:
                raise ValueError(f"not an involution: {self.mapping}")

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(i, self(i)) for i in range(1, self.n + 1) if self(i) > i]

    @property
    def lo(self) -> frozenset:
        return frozenset(i for i, _ in self.pairs)

    @property
    def hi(self) -> frozenset:
        return frozenset(j for _, j in self.pairs)

    @property
    def fixed(self) -> frozenset:
        return frozenset(i for i in range(1, self.n + 1) if self(i) == i)

    def __eq__(self, other):
        return isinstance(other, Involution) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __lt__(self, other):
        return self.mapping < other.mapping

    def cycle_notation(self) -> str:
        if not self.pairs:
            return "()"
        return "".join(f"({i} {j})" for i, j in self.pairs)

    def __repr__(self):
        return f"Involution{self.mapping}"


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_perms(n: int):
    return permutations(range(1, n + 1))


def cycle_type(sigma: Perm) -> tuple[int, ...]:
    """Cycle lengths of a permutation, sorted decreasing."""
    n = len(sigma)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def cycle_count(sigma: Perm) -> int:
    return len(cycle_type(sigma))


# ---------------------------------------------------------------------------
# pairings


def canonical_pairing(blocks) -> Pairing:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def pairing_pairs(alpha: Pairing) -> list[tuple[int, int]]:
    return [b for b in alpha if len(b) == 2]


@lru_cache(maxsize=None)
def enumerate_pairings(d: int, dp: int) -> tuple[Pairing, ...]:
    """All splittings of {1..d+d'} into d pairs and d'-d singletons."""
    if not 0 <= d <= dp:
        raise ValueError(f"need 0 <= d <= d', got d={d}, d'={dp}")
    n = d + dp
    out: list[Pairing] = []

    def build(free: tuple[int, ...], pairs_left: int, singles_left: int, acc):
        if not free:
            out.append(canonical_pairing(acc))
            return
        head, rest = free[0], free[1:]
        if singles_left:
            build(rest, pairs_left, singles_left - 1, acc + [(head,)])
        if pairs_left:
            for k, partner in enumerate(rest):
                remaining = rest[:k] + rest[k + 1 :]
                build(remaining, pairs_left - 1, singles_left, acc + [(head, partner)])

    build(tuple(range(1, n + 1)), d, dp - d, [])
    return tuple(sorted(out))


def pairing_count(d: int, dp: int) -> int:
    return factorial(d + dp) // (2**d * factorial(d) * factorial(dp - d))


def pairing_to_involution(alpha: Pairing, n: int) -> Involution:
    mapping = list(range(1, n + 1))
    for block in alpha:
        if len(block) == 2:
            i, j = block
            mapping[i - 1], mapping[j - 1] = j, i
    return Involution(mapping)


def apply_perm_to_pairing(sigma: Perm, alpha: Pairing) -> Pairing:
    return canonical_pairing(tuple(sigma[i - 1] for i in block) for block in alpha)


# ---------------------------------------------------------------------------
# the stratification index


def condition_c(j_set, jp_set, n: int) -> bool:
    """Prefix-count condition: |J' cap {1..k}| <= |J cap {1..k}| for all k."""
    j = set(j_set)
    jp = set(jp_set)
    if len(j) != len(jp):
        raise ValueError(f"|J| = {len(j)} differs from |J'| = {len(jp)}")
    if any(x < 1 or x > n for x in j | jp):
        raise ValueError(f"subsets must lie in 1..{n}")
    count_j = count_jp = 0
    for k in range(1, n + 1):
        count_j += k in j
        count_jp += k in jp
        if count_jp > count_j:
            return False
    # consequence: everything sits between min(J) and max(J')
    if j:
        lo, hi = min(j), max(jp)
        assert all(lo <= x <= hi for x in j | jp)
    return True


def enumerate_c_pairs(d: int, dp: int):
    """All ordered pairs (J, J') of d-subsets satisfying the prefix condition.

    Returns triples (J, J', disjoint) with J, J' sorted tuples.
    """
    if not 0 <= d <= dp:
        raise ValueError(f"need 0 <= d <= d', got d={d}, d'={dp}")
    n = d + dp
    subsets = list(combinations(range(1, n + 1), d))
    out = []
    for j in subsets:
        for jp in subsets:
            if condition_c(j, jp, n):
                out.append((j, jp, not set(j) & set(jp)))
    return out


def strata_involutions(j_set, jp_set, n: int | None = None) -> list[Involution]:
    """All involutions with low points J, high points J', pairing J upward into J'.

    n is the ambient size; it defaults to max(J union J') and only affects how
    many fixed points the returned involutions carry.
    """
    j = tuple(sorted(j_set))
    jp = tuple(sorted(jp_set))
    if set(j) & set(jp):
        raise ValueError("J and J' must be disjoint")
    if n is None:
        n = max(j + jp) if j or jp else 0
    if not condition_c(j, jp, n):
        raise ValueError("prefix condition fails for (J, J')")
    out: list[Involution] = []

    def match(lows: tuple[int, ...], highs: tuple[int, ...], acc):
        if not lows:
            mapping = list(range(1, n + 1))
            for a, b in acc:
                mapping[a - 1], mapping[b - 1] = b, a
            out.append(Involution(mapping))
            return
        low, rest = lows[0], lows[1:]
        for k, high in enumerate(highs):
            if high > low:
                match(rest, highs[:k] + highs[k + 1 :], acc + [(low, high)])

    match(j, jp, [])
    return sorted(out)


# ---------------------------------------------------------------------------
# the signed induced representation


def ind_character(sigma: Perm, d: int, dp: int) -> int:
    """Trace of sigma on the signed pairing representation.

    The basis is indexed by pairings; sigma fixes a basis line iff it fixes the
    pairing, and then acts by the product over pairs {i < j} of the orientation
    sign of the image pair.
    """
    if len(sigma) != d + dp:
        raise ValueError(f"permutation has length {len(sigma)}, expected {d + dp}")
    total = 0
    for alpha in enumerate_pairings(d, dp):
        if apply_perm_to_pairing(sigma, alpha) != alpha:
            continue
        sign = 1
        for i, j in pairing_pairs(alpha):
            if sigma[i - 1] > sigma[j - 1]:
                sign = -sign
        total += sign
    return total


def _perm_parity(images: list[int]) -> int:
    """Sign of the permutation sending position i to images[i] (a relabeling)."""
    order = sorted(range(len(images)), key=lambda k: images[k])
    sign = 1
    seen = [False] * len(order)
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _base_pairing(d: int, dp: int) -> Pairing:
    blocks = [(2 * k + 1, 2 * k + 2) for k in range(d)]
    blocks += [(i,) for i in range(2 * d + 1, d + dp + 1)]
    return canonical_pairing(blocks)


def perm_of_cycle_type(ctype) -> Perm:
    """A representative permutation with the given cycle lengths on 1..sum."""
    mapping = []
    start = 1
    for length in ctype:
        block = list(range(start, start + length))
        mapping.extend(block[1:] + block[:1])
        start += length
    return tuple(mapping)


def _stabilizer_character(sigma: Perm, alpha: Pairing, paired: tuple[int, ...]) -> int | None:
    """sign x triv character at sigma if sigma stabilizes alpha, else None."""
    if apply_perm_to_pairing(sigma, alpha) != alpha:
        return None
    return _perm_parity([sigma[i - 1] for i in paired])


@lru_cache(maxsize=None)
def _induced_character_by_type(ctype: tuple[int, ...], d: int, dp: int) -> int:
    """Induced character of sign x triv from the pairing stabilizer, per class."""
    n = d + dp
    if sum(ctype) != n:
        raise ValueError(f"cycle type {ctype} does not partition {n}")
    alpha = _base_pairing(d, dp)
    paired = tuple(i for block in pairing_pairs(alpha) for i in block)
    sigma = perm_of_cycle_type(ctype)
    stab_order = 2**d * factorial(d) * factorial(dp - d)
    total = 0
    for g in all_perms(n):
        ginv = [0] * n
        for i in range(1, n + 1):
            ginv[g[i - 1] - 1] = i
        # conjugate (g^{-1} sigma g)(i) = g^{-1}(sigma(g(i)))
        conj = tuple(ginv[sigma[g[i - 1] - 1] - 1] for i in range(1, n + 1))
        value = _stabilizer_character(conj, alpha, paired)
        if value is not None:
            total += value
    assert total % stab_order == 0
    return total // stab_order


def induced_character(sigma: Perm, d: int, dp: int) -> int:
    return _induced_character_by_type(cycle_type(sigma), d, dp)


def verify_induced_realization(d: int, dp: int) -> bool:
    """Signed pairing character equals the induced character at every permutation."""
    if d + dp > 7:
        raise ValueError("full symmetric group sweep capped at degree 7")
    return all(
        ind_character(sigma, d, dp) == induced_character(sigma, d, dp)
        for sigma in all_perms(d + dp)
    )


def invariants_dim(d: int, dp: int, r: int) -> int:
    """Dimension of invariants in (signed pairing rep) tensor W^{d+d'}, dim W = r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    n = d + dp
    total = 0
    for sigma in all_perms(n):
        total += ind_character(sigma, d, dp) * r ** cycle_count(sigma)
    order = factorial(n)
    assert total % order == 0
    return total // order


def character_table(d: int, dp: int) -> dict[tuple[int, ...], int]:
    """Signed pairing character by cycle type, asserting it is a class function."""
    table: dict[tuple[int, ...], int] = {}
    for sigma in all_perms(d + dp):
        ctype = cycle_type(sigma)
        value = ind_character(sigma, d, dp)
        if ctype in table:
            assert table[ctype] == value, "character is not a class function"
        else:
            table[ctype] = value
    return table
