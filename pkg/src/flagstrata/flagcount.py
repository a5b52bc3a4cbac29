"""Counting complete flags and automorphisms of finite torsion modules.

A module type is a partition mu naming the direct sum of cyclic pieces of
lengths mu_1, mu_2, ...  All counts over a residue field of size q are exact
univariate polynomials in q; groupoid masses (flag count divided by the two
automorphism group orders) are kept as unreduced fractions of polynomials.
Brute-force counters over F_2 and F_3 validate every polynomial formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import gf
from .coweights import as_partition, conjugate, partitions


class QPoly:
    """Integer polynomial in q, coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def q_power(cls, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power")
        return cls((0,) * e + (1,))

    @classmethod
    def geometric(cls, m: int) -> "QPoly":
        """1 + q + ... + q^{m-1}, i.e. (q^m - 1)/(q - 1)."""
        return cls((1,) * m)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self):
        return f"QPoly{self.coeffs}"


ONE = QPoly((1,))


@dataclass(frozen=True)
class QRat:
    """Ratio of integer polynomials in q, reduced only by integer content."""

    num: QPoly
    den: QPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = self.num, self.den
        if den.leading < 0:
            num, den = -num, -den
        g = gcd(num.content(), den.content())
        if g > 1:
            num = QPoly(c // g for c in num.coeffs)
            den = QPoly(c // g for c in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @property
    def degree(self) -> int:
        """Degree as a rational function of q; independent of common factors."""
        return self.num.degree - self.den.degree

    @property
    def leading(self) -> Fraction:
        """First Laurent coefficient of the expansion at q -> infinity."""
        return Fraction(self.num.leading, self.den.leading)

    def laurent_top(self, k: int) -> list[Fraction]:
        """Top k Laurent coefficients at q -> infinity, by exact long division."""
        if self.is_zero():
            return [Fraction(0)] * k
        num = list(reversed(self.num.coeffs))  # descending
        den = list(reversed(self.den.coeffs))
        out: list[Fraction] = []
        work = [Fraction(c) for c in num] + [Fraction(0)] * k
        for t in range(k):
            c = work[t] / den[0]
            out.append(c)
            for j, d in enumerate(den):
                work[t + j] -= c * d
        return out

    def __add__(self, other: "QRat") -> "QRat":
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "QRat") -> "QRat":
        return QRat(self.num * other.num, self.den * other.den)

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# the explicit module model over a small residue field


def jordan_matrix(mu) -> gf.Matrix:
    """Nilpotent matrix with one Jordan block of size mu_i per part."""
    mu = as_partition(mu)
    n = sum(mu)
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for part in mu:
        for k in range(part - 1):
            rows[offset + k][offset + k + 1] = 1
        offset += part
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class FiniteModule:
    """Torsion module of type mu over F_q, realized by its Jordan nilpotent."""

    q: int
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", as_partition(self.mu))
        if self.q not in (2, 3):
            raise ValueError("only residue fields of size 2 and 3 are modeled")

    @property
    def dim(self) -> int:
        return sum(self.mu)

    @property
    def operator(self) -> gf.Matrix:
        return jordan_matrix(self.mu)


BRUTE_FLAG_LIMIT = {2: 5, 3: 4}


def count_flags_brute(mu, q: int) -> int:
    """Exhaustively count complete chains of operator-stable subspaces."""
    module = FiniteModule(q, as_partition(mu))
    n = module.dim
    if n > BRUTE_FLAG_LIMIT[q]:
        raise ValueError(f"brute force capped at dimension {BRUTE_FLAG_LIMIT[q]} for q={q}")
    t = module.operator
    vectors = [v for v in gf.all_vectors(n, q) if any(v)]
    memo: dict[gf.Matrix, int] = {}

    def chains_from(sub: gf.Matrix) -> int:
        if len(sub) == n:
            return 1
        if sub in memo:
            return memo[sub]
        covers = set()
        for v in vectors:
            if not gf.in_span(sub, v, q):
                covers.add(gf.rref(sub + (v,), q))
        total = 0
        for cover in covers:
            if all(gf.in_span(cover, gf.mat_vec(t, row, q), q) for row in cover):
                total += chains_from(cover)
        memo[sub] = total
        return total

    return chains_from(())


@lru_cache(maxsize=None)
def count_flags_poly(mu) -> QPoly:
    """Flag count of the type-mu module as a polynomial in q.

    Recursion over removable corners: peeling the last box of the r-th value
    group contributes q^(m_1+...+m_{r-1}) * (1 + q + ... + q^{m_r - 1}) times
    the count of the peeled type.  Validated against count_flags_brute.
    """
    mu = as_partition(mu)
    if not mu:
        return ONE
    groups: list[tuple[int, int]] = []
    for part in mu:
        if groups and groups[-1][0] == part:
            groups[-1] = (part, groups[-1][1] + 1)
        else:
            groups.append((part, 1))
    total = QPoly()
    prefix = 0
    for value, mult in groups:
        weight = QPoly.q_power(prefix) * QPoly.geometric(mult)
        peeled = list(mu)
        peeled[peeled.index(value) + mult - 1] -= 1
        child = as_partition(sorted(peeled, reverse=True))
        total = total + weight * count_flags_poly(child)
        prefix += mult
    return total


def corner_weights(mu) -> list[QPoly]:
    """The per-corner counting polynomials; they sum to geometric(#parts)."""
    mu = as_partition(mu)
    groups: list[tuple[int, int]] = []
    for part in mu:
        if groups and groups[-1][0] == part:
            groups[-1] = (part, groups[-1][1] + 1)
        else:
            groups.append((part, 1))
    out = []
    prefix = 0
    for _, mult in groups:
        out.append(QPoly.q_power(prefix) * QPoly.geometric(mult))
        prefix += mult
    return out


@lru_cache(maxsize=None)
def aut_order_poly(mu) -> QPoly:
    """Order of the automorphism group of the type-mu module, as a polynomial.

    q^(sum of squared conjugate parts) times prod over value multiplicities m
    of (1 - q^-1)...(1 - q^-m), expanded without negative powers.  Treated as
    a conjectural formula and validated against count_commutant_units_brute.
    """
    mu = as_partition(mu)
    if not mu:
        return ONE
    conj = conjugate(mu)
    exponent = sum(c * c for c in conj)
    poly = ONE
    mult = 0
    prev = None
    for part in mu + (None,):
        if part == prev:
            mult += 1
            continue
        if prev is not None:
            for k in range(1, mult + 1):
                poly = poly * (QPoly.q_power(k) - ONE)
                exponent -= k
        prev, mult = part, 1
    assert exponent >= 0
    return QPoly.q_power(exponent) * poly


def count_commutant_units_brute(mu, q: int) -> int:
    """Count invertible matrices commuting with the Jordan nilpotent, by enumeration.

    Walks the full commutant algebra coefficient-by-coefficient (vectorized
    over a precomputed low-digit table) and counts the elements with nonzero
    determinant mod q.  Up to 3^16 matrices for mu = (1,1,1,1), q = 3.
    """
    import numpy as np

    module = FiniteModule(q, as_partition(mu))
    n = module.dim
    if n > 4:
        raise ValueError("unit count capped at dimension 4")
    if n == 0:
        return 1
    basis = gf.commutant_basis(module.operator, q)
    dim = len(basis)
    flat = np.array(
        [[b[i][j] for i in range(n) for j in range(n)] for b in basis], dtype=np.int16
    )
    low = min(dim, 12)
    low_sums = _digit_table(q, low) @ flat[:low] % q
    if dim > low:
        high_sums = _digit_table(q, dim - low) @ flat[low:] % q
    else:
        high_sums = np.zeros((1, n * n), dtype=np.int16)
    count = 0
    for hv in high_sums:
        mats = ((low_sums + hv) % q).reshape(-1, n, n)
        dets = _det_small(mats) % q
        count += int(np.count_nonzero(dets))
    return count


def _digit_table(q: int, k: int):
    import numpy as np

    idx = np.arange(q**k, dtype=np.int64)
    return ((idx[:, None] // q ** np.arange(k, dtype=np.int64)) % q).astype(np.int16)


def _det_small(mats):
    """Vectorized determinant of a stack of n x n matrices, n <= 4."""
    import numpy as np

    m = mats.astype(np.int32)
    n = m.shape[-1]
    if n == 1:
        return m[:, 0, 0]
    if n == 2:
        return m[:, 0, 0] * m[:, 1, 1] - m[:, 0, 1] * m[:, 1, 0]

    def minor(r1, r2, c1, c2):
        return m[:, r1, c1] * m[:, r2, c2] - m[:, r1, c2] * m[:, r2, c1]

    if n == 3:
        return (
            m[:, 0, 0] * minor(1, 2, 1, 2)
            - m[:, 0, 1] * minor(1, 2, 0, 2)
            + m[:, 0, 2] * minor(1, 2, 0, 1)
        )
    # Laplace expansion along the first two rows against complementary minors
    return (
        minor(0, 1, 0, 1) * minor(2, 3, 2, 3)
        - minor(0, 1, 0, 2) * minor(2, 3, 1, 3)
        + minor(0, 1, 0, 3) * minor(2, 3, 1, 2)
        + minor(0, 1, 1, 2) * minor(2, 3, 0, 3)
        - minor(0, 1, 1, 3) * minor(2, 3, 0, 2)
        + minor(0, 1, 2, 3) * minor(2, 3, 0, 1)
    )


# ---------------------------------------------------------------------------
# groupoid masses


def merge_type(mu, mup) -> tuple[int, ...]:
    """Type of the direct sum: sorted concatenation of the parts."""
    return as_partition(sorted(tuple(as_partition(mu)) + tuple(as_partition(mup)), reverse=True))


def fiber_mass(mu, mup) -> QRat:
    """Groupoid count of complete flags on the sum, divided by both Aut orders."""
    mu = as_partition(mu)
    mup = as_partition(mup)
    return QRat(
        count_flags_poly(merge_type(mu, mup)),
        aut_order_poly(mu) * aut_order_poly(mup),
    )


def collided_fiber_mass(d: int, dp: int) -> tuple[QRat, int, int]:
    """Total groupoid mass over all module types of degrees (d, d').

    Returns (mass, degree, leading coefficient).  The degree must be -d' and
    the leading coefficient must equal the number of pairings of d pairs and
    d'-d singletons; both are asserted by the acceptance suite, not here.
    """
    if not 0 <= d <= dp:
        raise ValueError(f"need 0 <= d <= d', got d={d}, d'={dp}")
    mass = QRat(QPoly(), ONE)
    for mu in partitions(d):
        for mup in partitions(dp):
            mass = mass + fiber_mass(mu, mup)
    leading = mass.leading
    assert leading.denominator == 1
    return mass, mass.degree, int(leading)


def groupoid_dim_check(mu) -> bool:
    """Flag-count degree minus Aut degree must equal -sum mu_i * i."""
    mu = as_partition(mu)
    lhs = 0 if not mu else count_flags_poly(mu).degree - aut_order_poly(mu).degree
    return lhs == -sum(x * (i + 1) for i, x in enumerate(mu))


def fiber_mass_table(dmax: int):
    """Rows (mu, mup, degree, margin, interleaved) for all |mu|, |mup| <= dmax."""
    from .coweights import flag_mass_margin, is_interleaved

    rows = []
    sizes = range(dmax + 1)
    for d in sizes:
        for dp in sizes:
            for mu in partitions(d):
                for mup in partitions(dp):
                    mass = fiber_mass(mu, mup)
                    margin, _ = flag_mass_margin(mu, mup)
                    rows.append(
                        (mu, mup, mass.degree, margin, is_interleaved(mu, mup))
                    )
    return rows
