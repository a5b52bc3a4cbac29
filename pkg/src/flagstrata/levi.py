"""Block Levi subgroups of GL_N: dominance orders, the squeeze set, and the
pairing-gap inequality.

A block Levi is an ordered set partition of {1..N}; each block keeps the
order induced from {1..N}.  Only GL_N root data are handled: the positive
coroots of the Levi are e_a - e_b for a before b in a common block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from .coweights import pairing, weakly_decreasing, weakly_increasing

Vec = tuple[int, ...]


@dataclass(frozen=True)
class BlockLevi:
    n: int
    blocks: tuple[tuple[int, ...], ...] = field()

    def __init__(self, n: int, blocks):
        object.__setattr__(self, "n", n)
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        object.__setattr__(self, "blocks", canon)
        flat = [i for b in canon for i in b]
        if sorted(flat) != list(range(1, n + 1)):
            raise ValueError(f"blocks {blocks} are not a partition of 1..{n}")
        if any(not b for b in canon):
            raise ValueError("empty block")

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks) + "]"


def full_levi(n: int) -> BlockLevi:
    return BlockLevi(n, [tuple(range(1, n + 1))])


def torus_levi(n: int) -> BlockLevi:
    return BlockLevi(n, [(i,) for i in range(1, n + 1)])


def parse_blocks(n: int, text: str) -> BlockLevi:
    """Parse a block list like "[[1,3],[2,4]]"."""
    import json

    data = json.loads(text)
    return BlockLevi(n, [tuple(b) for b in data])


def two_rho(n: int) -> Vec:
    return tuple(n - 1 - 2 * i for i in range(n))


def two_rho_levi(levi: BlockLevi) -> Vec:
    out = [0] * levi.n
    for block in levi.blocks:
        size = len(block)
        for j, pos in enumerate(block):
            out[pos - 1] = size - 1 - 2 * j
    return tuple(out)


def is_antistandard(levi: BlockLevi) -> bool:
    """Every simple coroot of the Levi pairs strictly positively with the gap.

    The gap is 2*rho of the ambient group minus 2*rho of the Levi; a torus has
    no simple coroots and passes vacuously.
    """
    gap = [a - b for a, b in zip(two_rho(levi.n), two_rho_levi(levi))]
    for block in levi.blocks:
        for a, b in zip(block, block[1:]):
            if gap[a - 1] - gap[b - 1] <= 0:
                return False
    return True


def antistandard_levis(n: int) -> list[BlockLevi]:
    """All antistandard block Levis of GL_n, enumerated over set partitions."""
    out = []
    for part in _set_partitions(list(range(1, n + 1))):
        levi = BlockLevi(n, [tuple(b) for b in part])
        if is_antistandard(levi):
            out.append(levi)
    return sorted(out, key=lambda lv: lv.blocks)


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


# ---------------------------------------------------------------------------
# dominance orders


def dom_g(lam: Vec) -> Vec:
    """Dominant representative: entries sorted weakly decreasing."""
    return tuple(sorted(lam, reverse=True))


def dom_m(lam: Vec, levi: BlockLevi) -> Vec:
    """Levi-dominant representative: sort weakly decreasing inside each block."""
    if len(lam) != levi.n:
        raise ValueError(f"expected length {levi.n}")
    out = [0] * levi.n
    for block in levi.blocks:
        values = sorted((lam[p - 1] for p in block), reverse=True)
        for pos, val in zip(block, values):
            out[pos - 1] = val
    return tuple(out)


def is_dominant_m(lam: Vec, levi: BlockLevi) -> bool:
    return all(
        weakly_decreasing([lam[p - 1] for p in block]) for block in levi.blocks
    )


def leq_g(lam: Vec, mu: Vec) -> bool:
    """Whether mu - lam is a nonnegative integer sum of e_i - e_j with i < j."""
    if len(lam) != len(mu):
        raise ValueError("length mismatch")
    if sum(lam) != sum(mu):
        return False
    run = 0
    for a, b in zip(lam, mu):
        run += b - a
        if run < 0:
            return False
    return True


def leq_m(lam: Vec, mu: Vec, levi: BlockLevi) -> bool:
    """Blockwise version of leq_g along each block's induced order."""
    if len(lam) != len(mu) or len(lam) != levi.n:
        raise ValueError("length mismatch")
    for block in levi.blocks:
        run = 0
        for p in block:
            run += mu[p - 1] - lam[p - 1]
            if run < 0:
                return False
        if run != 0:
            return False
    return True


def w0_g(lam: Vec) -> Vec:
    """Longest-element action: reverse the coordinates."""
    return tuple(reversed(lam))


def w0_m(lam: Vec, levi: BlockLevi) -> Vec:
    """Longest Levi element: reverse coordinates within each block."""
    out = list(lam)
    for block in levi.blocks:
        values = [lam[p - 1] for p in block]
        for pos, val in zip(block, reversed(values)):
            out[pos - 1] = val
    return tuple(out)


def weyl_orbit_m(lam: Vec, levi: BlockLevi):
    """All blockwise permutations of lam (the Levi Weyl orbit)."""
    per_block = []
    for block in levi.blocks:
        values = [lam[p - 1] for p in block]
        per_block.append(sorted(set(permutations(values))))
    for combo in product(*per_block):
        out = [0] * levi.n
        for block, values in zip(levi.blocks, combo):
            for pos, val in zip(block, values):
                out[pos - 1] = val
        yield tuple(out)


# ---------------------------------------------------------------------------
# the squeeze set and the inequality


def j_set(lam: Vec, nu: Vec, levi: BlockLevi) -> list[Vec]:
    """All Levi-dominant mu above lam blockwise and below nu globally.

    Candidates have the same block sums as lam, entries confined to the range
    of nu, and total equal to sum(nu); both order conditions are then tested
    literally.
    """
    if len(lam) != levi.n or len(nu) != levi.n:
        raise ValueError(f"expected length {levi.n}")
    if not weakly_decreasing(nu):
        raise ValueError(f"nu must be dominant, got {nu}")
    if sum(lam) != sum(nu):
        return []
    lo, hi = min(nu), max(nu)
    lam_dom = dom_m(lam, levi)
    per_block: list[list[tuple[int, ...]]] = []
    for block in levi.blocks:
        target = sum(lam[p - 1] for p in block)
        choices = [
            combo
            for combo in _decreasing_tuples(len(block), lo, hi)
            if sum(combo) == target
        ]
        if not choices:
            return []
        per_block.append(choices)
    out = []
    for combo in product(*per_block):
        mu = [0] * levi.n
        for block, values in zip(levi.blocks, combo):
            for pos, val in zip(block, values):
                mu[pos - 1] = val
        mu = tuple(mu)
        if leq_m(lam_dom, mu, levi) and leq_g(dom_g(mu), nu):
            out.append(mu)
    return sorted(out)


def _decreasing_tuples(length: int, lo: int, hi: int):
    if length == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in _decreasing_tuples(length - 1, lo, first):
            yield (first,) + rest


def f_val(mu: Vec, levi: BlockLevi) -> int:
    """Pairing gap of mu: <mu, 2 rho_M> - <dominant sort of mu, 2 rho>."""
    if not is_dominant_m(mu, levi):
        raise ValueError(f"{mu} is not dominant for the Levi {levi}")
    return pairing(mu, two_rho_levi(levi)) - pairing(dom_g(mu), two_rho(levi.n))


def verify_inequality(lam: Vec, nu: Vec, levi: BlockLevi) -> dict:
    """Check the pairing-gap bound over the whole squeeze set of (lam, nu).

    For every mu in the set, f(mu) <= <lam, 2rho - 2rho_M> must hold, in both
    of its equivalent arrangements.  For an antistandard Levi, equality must
    pin down the configuration: lam antidominant, mu the blockwise reversal
    of lam, and the dominant sort of mu the full reversal of lam.
    """
    rho_gap = tuple(a - b for a, b in zip(two_rho(levi.n), two_rho_levi(levi)))
    rhs = pairing(lam, rho_gap)
    rho_m = two_rho_levi(levi)
    rho = two_rho(levi.n)
    antistandard = is_antistandard(levi)
    holds = True
    witnesses = []
    for mu in j_set(lam, nu, levi):
        value = f_val(mu, levi)
        mu_dom = dom_g(mu)
        # the same inequality rearranged; both forms must agree
        first = value <= rhs
        second = pairing(
            tuple(a + b for a, b in zip(lam, mu)), rho_m
        ) <= pairing(tuple(a + b for a, b in zip(lam, mu_dom)), rho)
        assert first == second, (lam, nu, mu)
        if not first:
            holds = False
            witnesses.append(
                {
                    "mu": mu,
                    "mu_dom": mu_dom,
                    "f": value,
                    "rhs": rhs,
                    "kind": "violation",
                }
            )
            continue
        if value == rhs:
            expected = (
                weakly_increasing(lam)
                and mu == w0_m(lam, levi)
                and mu_dom == w0_g(lam)
            )
            witnesses.append(
                {
                    "mu": mu,
                    "mu_dom": mu_dom,
                    "f": value,
                    "rhs": rhs,
                    "kind": "equality",
                    "expected_configuration": expected,
                    "lam_antidominant_g": weakly_increasing(lam),
                    "lam_antidominant_m": is_dominant_m(
                        tuple(-x for x in lam), levi
                    ),
                }
            )
            if antistandard and not expected:
                holds = False
    return {"holds": holds, "antistandard": antistandard, "witnesses": witnesses}


def _dominant_box(n: int, bound: int) -> list[Vec]:
    return [
        nu
        for nu in product(range(bound, -bound - 1, -1), repeat=n)
        if weakly_decreasing(nu)
    ]


def _sweep_chunk(payload) -> tuple[int, list, list]:
    n, blocks, lams, nu_bound = payload
    levi = BlockLevi(n, blocks)
    by_sum: dict[int, list[Vec]] = {}
    for nu in _dominant_box(n, nu_bound):
        by_sum.setdefault(sum(nu), []).append(nu)
    total = 0
    equalities = []
    failures = []
    for lam in lams:
        for nu in by_sum.get(sum(lam), ()):
            report = verify_inequality(lam, nu, levi)
            total += 1
            for w in report["witnesses"]:
                if w["kind"] == "equality":
                    equalities.append(
                        (lam, nu, w["mu"], w["mu_dom"], w["f"], w["rhs"])
                    )
            if not report["holds"]:
                failures.append((lam, nu, report))
    return total, equalities, failures


def sweep_inequality(levi: BlockLevi, lam_bound: int, nu_bound: int, jobs: int = 1) -> dict:
    """Exhaustive check of the bound for all lam, dominant nu within the box.

    Returns totals, every equality witness (lam, nu, mu, mu_dom, f, rhs) in
    canonical order, and any failures.
    """
    n = levi.n
    lams = list(product(range(-lam_bound, lam_bound + 1), repeat=n))
    if jobs > 1 and len(lams) > jobs:
        from multiprocessing import Pool

        chunks = [
            (n, levi.blocks, lams[k::jobs], nu_bound) for k in range(jobs)
        ]
        with Pool(jobs) as pool:
            parts = pool.map(_sweep_chunk, chunks)
    else:
        parts = [_sweep_chunk((n, levi.blocks, lams, nu_bound))]
    total = sum(p[0] for p in parts)
    equalities = sorted(e for p in parts for e in p[1])
    failures = [f for p in parts for f in p[2]]
    failures.sort(key=lambda item: (item[0], item[1]))
    return {
        "levi": str(levi),
        "pairs_checked": total,
        "equalities": equalities,
        "failures": failures,
        "holds": not failures,
    }
