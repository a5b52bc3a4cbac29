"""Exact Schur polynomial calculus in finitely many variables.

Symmetric polynomials are stored in the monomial symmetric basis: a map from
dominant exponent vectors (weakly decreasing, fixed length, nonnegative) to
integer coefficients, each key standing for its full orbit of monomials.
Schur polynomials come from semistandard tableau enumeration, which doubles
as the independent character oracle for every decomposition in this module.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial

from .coweights import (
    as_partition,
    odd_even_split,
    pad,
    partitions,
    weakly_decreasing,
)

Exponent = tuple[int, ...]


class SymPoly:
    """Integer symmetric polynomial keyed by dominant exponent vectors."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Exponent, int] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {}
        for key, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            if len(key) != nvars or not weakly_decreasing(key) or key[-1] < 0:
                raise ValueError(f"bad dominant exponent {key} for {nvars} variables")
            self.terms[tuple(key)] = coeff

    @classmethod
    def zero(cls, nvars: int) -> "SymPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def from_monomials(cls, nvars: int, mono: dict[Exponent, int]) -> "SymPoly":
        """Build from a full (symmetric) monomial dict by keeping dominant keys."""
        return cls(nvars, {k: c for k, c in mono.items() if weakly_decreasing(k)})

    def full_monomials(self) -> dict[Exponent, int]:
        out: dict[Exponent, int] = {}
        for key, coeff in self.terms.items():
            for perm in set(permutations(key)):
                out[perm] = coeff
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _combine(self, other: "SymPoly", sign: int) -> "SymPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            val = terms.get(key, 0) + sign * coeff
            if val:
                terms[key] = val
            else:
                terms.pop(key, None)
        out = SymPoly.zero(self.nvars)
        out.terms = terms
        return out

    def __add__(self, other: "SymPoly") -> "SymPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self._combine(other, -1)

    def scale(self, c: int) -> "SymPoly":
        out = SymPoly.zero(self.nvars)
        if c:
            out.terms = {k: c * v for k, v in self.terms.items()}
        return out

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        full_a = self.full_monomials()
        full_b = other.full_monomials()
        if len(full_b) < len(full_a):
            full_a, full_b = full_b, full_a
        acc: dict[Exponent, int] = defaultdict(int)
        for ea, ca in full_a.items():
            for eb, cb in full_b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if weakly_decreasing(e):
                    acc[e] += ca * cb
        return SymPoly(self.nvars, acc)

    def eval_ones(self) -> int:
        """Value at x_1 = ... = x_N = 1, counting each orbit with its size."""
        total = 0
        for key, coeff in self.terms.items():
            orbit = factorial(self.nvars)
            for value in set(key):
                orbit //= factorial(key.count(value))
            total += coeff * orbit
        return total

    def leading(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def __repr__(self):
        return f"SymPoly({self.nvars}, {dict(sorted(self.terms.items(), reverse=True))})"


# ---------------------------------------------------------------------------
# basic characters


def _ssyt_weights(shape: Exponent, nvars: int):
    """Yield the content vector of every semistandard tableau of the shape."""
    rows = len(shape)
    weight = [0] * nvars

    def fill(r: int, c: int, tableau):
        if r == rows:
            yield tuple(weight)
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        low = tableau[r][c - 1] if c > 0 else 0
        if r > 0:
            low = max(low, tableau[r - 1][c] + 1)
        for val in range(low, nvars):
            tableau[r][c] = val
            weight[val] += 1
            yield from fill(nr, nc, tableau)
            weight[val] -= 1

    if rows == 0:
        yield (0,) * nvars
        return
    tableau = [[0] * width for width in shape]
    yield from fill(0, 0, tableau)


@lru_cache(maxsize=None)
def schur_poly(lam, nvars: int) -> SymPoly:
    """Schur polynomial s_lam(x_1..x_N) by semistandard tableau enumeration."""
    lam = as_partition(lam)
    if len(lam) > nvars:
        raise ValueError(f"{lam} has more than {nvars} parts; the character is zero")
    acc: dict[Exponent, int] = defaultdict(int)
    for weight in _ssyt_weights(lam, nvars):
        if weakly_decreasing(weight):
            acc[weight] += 1
    return SymPoly(nvars, acc)


def schur_dim(lam, nvars: int) -> int:
    """Dimension of the GL_N representation with highest weight lam (Weyl formula)."""
    lam = pad(as_partition(lam), nvars)
    num = den = 1
    for i in range(nvars):
        for j in range(i + 1, nvars):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def complete_homogeneous(k: int, nvars: int) -> SymPoly:
    """h_k(x_1..x_N): every monomial symmetric function of degree k, coefficient 1."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k == 0:
        return SymPoly.one(nvars)
    return SymPoly(nvars, {pad(p, nvars): 1 for p in partitions(k, max_parts=nvars)})


def wedge2_power_char(d: int, nvars: int) -> SymPoly:
    """Character of the d-th symmetric power of wedge^2 of the defining space.

    Computed directly as h_d evaluated at the pairwise products x_i x_j, i < j.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    pairs = list(combinations(range(nvars), 2))
    acc: dict[Exponent, int] = defaultdict(int)
    for combo in combinations_with_replacement(pairs, d):
        e = [0] * nvars
        for i, j in combo:
            e[i] += 1
            e[j] += 1
        key = tuple(e)
        if weakly_decreasing(key):
            acc[key] += 1
    return SymPoly(nvars, acc)


# ---------------------------------------------------------------------------
# decomposition


def decompose_schur(p: SymPoly) -> dict[Exponent, int]:
    """Write p as a nonnegative sum of Schur polynomials, greedily by leading term.

    Repeatedly subtracts coeff * s_lam at the lex-greatest dominant exponent.
    Raises ValueError if a negative coefficient turns up, i.e. p was not a
    genuine character.  Keys of the result are trimmed partitions.
    """
    work = dict(p.terms)
    out: dict[Exponent, int] = {}
    while work:
        key = max(work)
        coeff = work[key]
        if coeff < 0:
            raise ValueError(f"not a character: leading coefficient {coeff} at {key}")
        s = schur_poly(as_partition(key), p.nvars)
        for k2, c2 in s.terms.items():
            val = work.get(k2, 0) - coeff * c2
            if val:
                work[k2] = val
            else:
                work.pop(k2, None)
        out[as_partition(key)] = coeff
    return out


def pieri(lam, k: int, nvars: int) -> set[Exponent]:
    """All mu with mu/lam a horizontal strip of size k and at most N rows."""
    lam = as_partition(lam)
    if len(lam) > nvars:
        raise ValueError(f"{lam} has more than {nvars} parts")
    if k < 0:
        raise ValueError("strip size must be >= 0")
    base = pad(lam, nvars)
    out: set[Exponent] = set()

    def extend(i: int, remaining: int, prefix):
        if i == nvars:
            if remaining == 0:
                out.add(as_partition(prefix))
            return
        hi = base[i] + remaining
        if i > 0:
            hi = min(hi, base[i - 1])
        for val in range(base[i], hi + 1):
            extend(i + 1, remaining - (val - base[i]), prefix + [val])

    extend(0, k, [])
    return out


# ---------------------------------------------------------------------------
# the multiplicity-free decomposition and its index sets


def dominant_index(n: int, d: int, dp: int) -> set[Exponent]:
    """Dominant nonnegative lambda of length 2n with odd-position sum dp, even d."""
    if not 0 <= d <= dp:
        raise ValueError(f"need 0 <= d <= d', got d={d}, d'={dp}")
    out = set()
    for p in partitions(d + dp, max_parts=2 * n):
        lam = pad(p, 2 * n)
        odd, even = odd_even_split(lam)
        if (
            sum(odd) == dp
            and sum(even) == d
            and weakly_decreasing(odd)
            and weakly_decreasing(even)
        ):
            out.add(as_partition(lam))
    return out


def antidominant_index(n: int, d: int, dp: int) -> set[Exponent]:
    """Nonnegative weakly increasing lambda of length 2n, odd-position sum d, even dp."""
    if not 0 <= d <= dp:
        raise ValueError(f"need 0 <= d <= d', got d={d}, d'={dp}")
    out = set()
    for p in partitions(d + dp, max_parts=2 * n):
        lam = tuple(reversed(pad(p, 2 * n)))
        odd, even = odd_even_split(lam)
        if sum(odd) == d and sum(even) == dp:
            out.add(lam)
    return out


def verify_index_reversal(n: int, d: int, dp: int) -> bool:
    """Entry reversal must biject the antidominant index onto the dominant one."""
    dom = {pad(lam, 2 * n) for lam in dominant_index(n, d, dp)}
    anti = antidominant_index(n, d, dp)
    reversed_anti = {tuple(reversed(lam)) for lam in anti}
    return reversed_anti == dom and len(anti) == len(dom)


def product_char(n: int, d: int, dp: int) -> SymPoly:
    """Character of Sym^d(wedge^2 V) tensor Sym^{d'-d} V for dim V = 2n."""
    if not 0 <= d <= dp:
        raise ValueError(f"need 0 <= d <= d', got d={d}, d'={dp}")
    return wedge2_power_char(d, 2 * n) * complete_homogeneous(dp - d, 2 * n)


def verify_multiplicity_free(n: int, d: int, dp: int) -> bool:
    """The product character must decompose as exactly the dominant index, all mult 1."""
    dec = decompose_schur(product_char(n, d, dp))
    return dec == {lam: 1 for lam in dominant_index(n, d, dp)}


def pieri_source(lam, n: int, d: int, dp: int) -> Exponent:
    """The square-index element whose Pieri strip produces lam.

    Both halves of the result equal the even half of lam; value lives in the
    (d, d) index set and lam/result is a horizontal strip of size d' - d.
    """
    lam = as_partition(lam)
    if lam not in dominant_index(n, d, dp):
        raise ValueError(f"{lam} is not in the index set for n={n}, d={d}, d'={dp}")
    _, even = odd_even_split(pad(lam, 2 * n))
    out = []
    for value in even:
        out.extend((value, value))
    return as_partition(out)


def index_dim_product(n: int, d: int, dp: int) -> int:
    """Closed-form dimension of the product character at x = 1."""
    return comb(comb(2 * n, 2) + d - 1, d) * comb(2 * n + dp - d - 1, dp - d)


def decomposition_to_json(dec: dict[Exponent, int]) -> list[dict]:
    """Canonical JSON form: [{"lambda": [...], "mult": k}, ...], largest first."""
    return [
        {"lambda": list(lam), "mult": mult}
        for lam, mult in sorted(dec.items(), reverse=True)
    ]
