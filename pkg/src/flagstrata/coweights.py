"""Integer coweight vectors, partitions, and the closed-form dimension formulas.

A coweight is a plain tuple of integers.  A partition is a weakly decreasing
tuple of nonnegative integers with trailing zeros trimmed.  The lattice
classes tested by :func:`classify` are:

    plus          weakly decreasing
    minus         weakly increasing
    nonneg        every entry >= 0
    nonneg-plus   nonneg and plus
    nonneg-minus  nonneg and minus
    pos           total 0 and every prefix sum >= 0
    nonneg-pos    every prefix sum >= 0 (sum of a nonneg and a pos vector)
"""

from __future__ import annotations

Vec = tuple[int, ...]

LATTICE_CLASSES = (
    "plus",
    "minus",
    "nonneg",
    "nonneg-plus",
    "nonneg-minus",
    "pos",
    "nonneg-pos",
)


def degree(v: Vec) -> int:
    return sum(v)


def pairing(a: Vec, b: Vec) -> int:
    """Standard inner product <a, b> = sum a_i b_i."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def weakly_decreasing(v) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def weakly_increasing(v) -> bool:
    return all(v[i] <= v[i + 1] for i in range(len(v) - 1))


def classify(lam: Vec, cls: str, deg: int | None = None) -> bool:
    """Test membership of lam in one of the seven lattice classes.

    When deg is given, additionally require sum(lam) == deg.
    """
    if cls not in LATTICE_CLASSES:
        raise ValueError(f"unknown lattice class {cls!r}, expected one of {LATTICE_CLASSES}")
    if deg is not None and sum(lam) != deg:
        return False
    nonneg = all(x >= 0 for x in lam)
    if cls == "plus":
        return weakly_decreasing(lam)
    if cls == "minus":
        return weakly_increasing(lam)
    if cls == "nonneg":
        return nonneg
    if cls == "nonneg-plus":
        return nonneg and weakly_decreasing(lam)
    if cls == "nonneg-minus":
        return nonneg and weakly_increasing(lam)
    prefix_ok = all(sum(lam[: i + 1]) >= 0 for i in range(len(lam)))
    if cls == "pos":
        return sum(lam) == 0 and prefix_ok
    # nonneg-pos: lam = a + b with a entrywise >= 0 and b in the pos class.
    # Taking a = (0, ..., 0, sum(lam)) shows this is exactly "all prefix sums >= 0".
    return prefix_ok


# ---------------------------------------------------------------------------
# partitions


def as_partition(seq) -> Vec:
    """Canonical partition: validate weak decrease and nonnegativity, trim zeros."""
    parts = tuple(seq)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if not weakly_decreasing(parts):
        raise ValueError(f"not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def pad(parts: Vec, m: int) -> Vec:
    if len(parts) > m:
        raise ValueError(f"{parts} has more than {m} parts")
    return tuple(parts) + (0,) * (m - len(parts))


def conjugate(mu) -> Vec:
    mu = as_partition(mu)
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None):
    """Yield all partitions of n, weakly decreasing tuples, in reverse-lex order."""
    if n < 0:
        return
    bound = n if max_part is None else min(max_part, n)

    def gen(remaining, largest, parts_left):
        if remaining == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in gen(remaining - first, first, parts_left - 1):
                yield (first,) + rest

    limit = n if max_parts is None else max_parts
    yield from gen(n, bound, limit)


def parse_coweight(text: str) -> Vec:
    """Parse a comma-separated integer vector, e.g. "2,-1,0"."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def format_coweight(v: Vec) -> str:
    return ",".join(str(x) for x in v)


def parse_partition(text: str) -> Vec:
    return as_partition(parse_coweight(text))


# ---------------------------------------------------------------------------
# splits and interleavings


def odd_even_split(lam: Vec) -> tuple[Vec, Vec]:
    """Split into (entries at odd positions, entries at even positions), 1-based."""
    if len(lam) % 2 != 0:
        raise ValueError(f"odd length {len(lam)}")
    return tuple(lam[0::2]), tuple(lam[1::2])


def interleave(mu, mup, m: int) -> Vec:
    """The length-2m vector (mup_1, mu_1, mup_2, mu_2, ...) after zero-padding."""
    a = pad(as_partition(mu), m)
    b = pad(as_partition(mup), m)
    out = []
    for i in range(m):
        out.append(b[i])
        out.append(a[i])
    return tuple(out)


def special_transposition_chain(theta: Vec) -> tuple[Vec, list[tuple[int, int]], int]:
    """Sort theta weakly decreasing by adjacent swaps of strict ascents.

    Each swap exchanges x_i < x_{i+1} and is recorded as (i, a) with i the
    1-based position and a = x_{i+1} - x_i > 0 the drop in <., tau> for
    tau = (0, 1, ..., len-1).  Returns (sorted vector, swap list, total drop).
    """
    if any(x < 0 for x in theta):
        raise ValueError(f"negative entry in {theta}")
    xs = list(theta)
    steps: list[tuple[int, int]] = []
    i = 0
    while i < len(xs) - 1:
        if xs[i] < xs[i + 1]:
            a = xs[i + 1] - xs[i]
            xs[i], xs[i + 1] = xs[i + 1], xs[i]
            steps.append((i + 1, a))
            i = max(i - 1, 0)
        else:
            i += 1
    eta = tuple(xs)
    gap = sum(a for _, a in steps)
    return eta, steps, gap


def is_interleaved(mu, mup) -> bool:
    """True iff mup_1 >= mu_1 >= mup_2 >= mu_2 >= ... after common padding."""
    mu = as_partition(mu)
    mup = as_partition(mup)
    m = max(len(mu), len(mup), 1)
    a = pad(mu, m)
    b = pad(mup, m)
    for i in range(m):
        if b[i] < a[i]:
            return False
        if i + 1 < m and a[i] < b[i + 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# dimension formulas


def staircase_pairing(lam: Vec, n: int) -> int:
    """<lam, (n-1, n-2, ..., 0)> for a length-n vector."""
    if len(lam) != n:
        raise ValueError(f"expected length {n}, got {len(lam)}")
    return sum(x * (n - 1 - i) for i, x in enumerate(lam))


def flag_bundle_dim(n: int, r: int, g: int) -> int:
    """n*r + (1-g) * sum_{i<n} i^2; for even n this agrees with the cubic closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    value = n * r + (1 - g) * sum(i * i for i in range(1, n))
    if n % 2 == 0:
        assert value == flag_bundle_dim_even(n, r, g)
    return value


def flag_bundle_dim_even(n: int, r: int, g: int) -> int:
    """Closed form for even n: n*r + (1-g)(n-1)(n/2)(2n-1)/3."""
    if n % 2 != 0:
        raise ValueError("closed form requires even n")
    num = (n - 1) * (n // 2) * (2 * n - 1)
    assert num % 3 == 0
    return n * r + (1 - g) * (num // 3)


def fibration_rank(n: int, d: int, dp: int, lam: Vec, g: int) -> int:
    """Rank of the stratum fibration over its divisor base, as a polynomial in the data."""
    if len(lam) != 2 * n:
        raise ValueError(f"expected length {2 * n}, got {len(lam)}")
    squares = sum(i * i for i in range(1, n))
    return (
        n * d
        + (n - 1) * dp
        - staircase_pairing(lam, 2 * n)
        - n * (n - 1) * (g - 1)
        - (4 * g - 4) * squares
    )


def _relative_dim(n: int, d: int, g: int) -> int:
    # n*d - (n/6)(n-1)(4n+1)(g-1); the product n(n-1)(4n+1) is divisible by 6
    num = n * (n - 1) * (4 * n + 1)
    assert num % 6 == 0
    return n * d - (num // 6) * (g - 1)


def fibration_dim_identity(n: int, d: int, dp: int, g: int) -> tuple[int, int, bool]:
    """Both sides of 2 * (rel dim + rel dim') = even-rank flag dim + n(g-1)."""
    lhs = 2 * (_relative_dim(n, d, g) + _relative_dim(n, dp, g))
    rhs = flag_bundle_dim(2 * n, d + dp, g) + n * (g - 1)
    return lhs, rhs, lhs == rhs


def complete_flag_dim(eta) -> int:
    """Dimension of the scheme of complete flags of a torsion module of type eta.

    Telescoped form sum_i eta_i * (i - 1); the literal form
    sum_i (eta_i - eta_{i+1}) * i(i-1)/2 is kept as a test oracle.
    """
    eta = as_partition(eta)
    return sum(x * i for i, x in enumerate(eta))


def automorphism_dim(mu) -> int:
    """dim Aut of a torsion module of type mu: sum_i mu_i * (2i - 1)."""
    mu = as_partition(mu)
    return sum(x * (2 * i + 1) for i, x in enumerate(mu))


def flag_mass_margin(mu, mup) -> tuple[int, bool]:
    """Dimension margin of the flag groupoid bound for the pair (mu, mup).

    margin = complete_flag_dim(sorted merge) - aut dims + |mup|; it is <= 0,
    with equality exactly on interleaved pairs.
    """
    mu = as_partition(mu)
    mup = as_partition(mup)
    m = max(len(mu), len(mup), 1)
    theta = interleave(mu, mup, m)
    eta = tuple(sorted(theta, reverse=True))
    margin = (
        complete_flag_dim(eta)
        - automorphism_dim(mu)
        - automorphism_dim(mup)
        + sum(mup)
    )
    return margin, margin == 0


def flag_groupoid_dim(mu) -> int:
    """Dimension of flags-mod-automorphisms for a single module: -sum mu_i * i."""
    mu = as_partition(mu)
    return -sum(x * (i + 1) for i, x in enumerate(mu))
