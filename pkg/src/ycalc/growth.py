"""Markov growth of Young diagrams: up/down kernels and a seeded sampler.

The up kernel on a shape is the row-weight family from `moments`; the
down kernel divides the corner weights by the cell count.  Both are exact
probability vectors.  A dimension function satisfies dim(Λ) = Σ κ·dim(λ)
over shapes covered by Λ, with κ the up-kernel weight of the added row;
the down kernel must then factor as κ · dim(λ)/dim(Λ), which is checked
rather than assumed.

The Monte Carlo sampler is deterministic per (seed, path index): each
path derives its own 64-bit generator state, so the output is invariant
under any parallel split of the path range.  Per-sample contents are kept
as exact rationals; floats appear only in the reported estimates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .moments import (
    corner_binomials,
    pieri_coefficients,
    s_r_direct,
    sigma_r_direct,
)
from .partitions import EMPTY, Partition, check_alpha, enumerate_partitions
from .series import comb_int

# Path seed mixing; the two odd constants are the usual 64-bit Weyl /
# splitmix multipliers, chosen so distinct path indices decorrelate.
_SEED_MULT = 0x9E3779B97F4A7C15
_PATH_MULT = 0xBF58476D1CE4E5B9
_WORD = 1 << 64


@dataclass(frozen=True)
class GrowthKernel:
    """One-step distribution anchored at `base`: up adds a cell, down
    removes one.  Atoms are (row, probability) with exact normalization."""

    base: Partition
    alpha: Fraction
    direction: str
    atoms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        total = Fraction(0)
        for _, p in self.atoms:
            assert p >= 0, "negative kernel atom"
            total += p
        assert total == 1, "kernel does not sum to 1"

    def probability(self, row: int) -> Fraction:
        for i, p in self.atoms:
            if i == row:
                return p
        return Fraction(0)


def transition_kernel(la: Partition, alpha) -> GrowthKernel:
    alpha = check_alpha(alpha)
    return GrowthKernel(la, alpha, "up", pieri_coefficients(la, alpha))


def cotransition_kernel(la: Partition, alpha) -> GrowthKernel:
    alpha = check_alpha(alpha)
    if la.weight == 0:
        raise ValueError("no co-transition from the empty shape")
    w = la.weight
    atoms = tuple((i, v / w) for i, v in corner_binomials(la, alpha))
    return GrowthKernel(la, alpha, "down", atoms)


class DimensionTable:
    """dim values filled on demand by the covering recurrence."""

    def __init__(self, alpha):
        self.alpha = check_alpha(alpha)
        self._dim: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}

    def dimension(self, la: Partition) -> Fraction:
        hit = self._dim.get(la.parts)
        if hit is not None:
            return hit
        total = Fraction(0)
        for i in la.removable_rows():
            below = la.remove_cell(i)
            kappa = transition_kernel(below, self.alpha).probability(i)
            total += kappa * self.dimension(below)
        self._dim[la.parts] = total
        return total


def cotransition_from_dimensions(la: Partition, alpha, table: DimensionTable | None = None) -> GrowthKernel:
    """Down kernel rebuilt as κ·dim(λ)/dim(Λ); must match the direct one."""
    alpha = check_alpha(alpha)
    if la.weight == 0:
        raise ValueError("no co-transition from the empty shape")
    if table is None:
        table = DimensionTable(alpha)
    dim_top = table.dimension(la)
    assert dim_top != 0
    atoms = []
    for i in la.removable_rows():
        below = la.remove_cell(i)
        kappa = transition_kernel(below, alpha).probability(i)
        atoms.append((i, kappa * table.dimension(below) / dim_top))
    return GrowthKernel(la, alpha, "down", tuple(atoms))


def added_content(la: Partition, alpha, row: int) -> Fraction:
    """Content of the cell an up-step appends in the given row."""
    alpha = check_alpha(alpha)
    return Fraction(la.part(row)) - Fraction(row - 1) / alpha


def removed_content(la: Partition, alpha, row: int) -> Fraction:
    """Content of the cell a down-step deletes from the given row."""
    alpha = check_alpha(alpha)
    return Fraction(la.parts[row - 1] - 1) - Fraction(row - 1) / alpha


def exact_transition_moment(la: Partition, alpha, r: int) -> Fraction:
    """r-th moment of the appended content under the up kernel."""
    alpha = check_alpha(alpha)
    total = Fraction(0)
    for i, p in transition_kernel(la, alpha).atoms:
        total += added_content(la, alpha, i) ** r * p
    assert total == s_r_direct(la, alpha, r)
    return total


def exact_cotransition_moment(la: Partition, alpha, r: int) -> Fraction:
    """r-th moment of the deleted content under the down kernel.

    Computed twice: straight from the atoms, and as the binomial
    combination (1/|Λ|) Σ_k (-1)^{r-k} C(r,k) σ_k(Λ) of corner moments.
    """
    alpha = check_alpha(alpha)
    if la.weight == 0:
        raise ValueError("no co-transition from the empty shape")
    direct = Fraction(0)
    for i, p in cotransition_kernel(la, alpha).atoms:
        direct += removed_content(la, alpha, i) ** r * p
    combo = Fraction(0)
    for k in range(0, r + 1):
        combo += (-1) ** (r - k) * comb_int(r, k) * sigma_r_direct(la, alpha, k)
    combo /= la.weight
    assert direct == combo, f"moment routes disagree on {la}: {direct} vs {combo}"
    return direct


def tableau_counts(n_max: int) -> dict[Partition, int]:
    """Standard-tableau counts by the covering recurrence f(Λ) = Σ f(λ)."""
    f: dict[Partition, int] = {EMPTY: 1}
    for n in range(1, n_max + 1):
        for la in enumerate_partitions(n):
            f[la] = sum(f[la.remove_cell(i)] for i in la.removable_rows())
    return f


def plancherel_check(n_max: int) -> bool:
    """At alpha = 1 both kernels reduce to tableau-count ratios and the
    dimension function to f(λ)^2/|λ|!.  Raises on the first mismatch."""
    one = Fraction(1)
    f = tableau_counts(n_max + 1)
    table = DimensionTable(one)
    for n in range(0, n_max + 1):
        for la in enumerate_partitions(n):
            up = transition_kernel(la, one)
            for i, p in up.atoms:
                above = la.add_cell(i)
                want = Fraction(f[above], (n + 1) * f[la])
                assert p == want, f"up kernel off at {la} row {i}"
            if n:
                down = cotransition_kernel(la, one)
                for i, q in down.atoms:
                    below = la.remove_cell(i)
                    want = Fraction(f[below], f[la])
                    assert q == want, f"down kernel off at {la} row {i}"
            want_dim = Fraction(f[la] ** 2, math.factorial(n))
            assert table.dimension(la) == want_dim, f"dimension off at {la}"
    return True


def distribution_after(start: Partition, alpha, steps: int) -> dict[Partition, Fraction]:
    """Exact state distribution after the given number of up steps."""
    alpha = check_alpha(alpha)
    dist = {start: Fraction(1)}
    for _ in range(steps):
        nxt: dict[Partition, Fraction] = {}
        for la, mass in dist.items():
            for i, p in transition_kernel(la, alpha).atoms:
                above = la.add_cell(i)
                nxt[above] = nxt.get(above, Fraction(0)) + mass * p
        dist = nxt
    return dist


@dataclass(frozen=True)
class MomentStat:
    r: int
    estimate: float
    exact: Fraction
    std_error: float

    def within(self, k: float) -> bool:
        if self.std_error == 0.0:
            return self.estimate == float(self.exact)
        return abs(self.estimate - float(self.exact)) <= k * self.std_error


@dataclass(frozen=True)
class SampleStats:
    steps: int
    alpha: Fraction
    paths: int
    seed: int
    start: Partition
    moments: tuple[MomentStat, ...]
    occupancy: tuple[tuple[str, int], ...]
    path_dump: tuple[str, ...] | None


def _path_rng(seed: int, path: int) -> random.Random:
    mixed = (seed * _SEED_MULT + path * _PATH_MULT) % _WORD
    return random.Random(mixed)


def _cumulative_atoms(la: Partition, alpha) -> tuple[tuple[int, int, int], ...]:
    """Per-row cumulative thresholds scaled to 64-bit resolution: entries
    (row, num, den) selected by the first u·den < num·2^64."""
    atoms = pieri_coefficients(la, alpha)
    out = []
    acc = Fraction(0)
    for row, p in atoms:
        acc += p
        out.append((row, acc.numerator, acc.denominator))
    assert acc == 1
    return tuple(out)


def sample_growth(
    steps: int,
    alpha,
    paths: int,
    seed: int,
    start: Partition = EMPTY,
    r_max: int = 4,
    dump_paths: bool = False,
    dump_cap: int = 10_000,
) -> SampleStats:
    """Run independent up-walks and compare final-step content moments
    against the exact law.

    The reference for moment r is Σ_state P(state) s_r(state) over the
    exact state distribution one step before the end, which for a single
    step from a fixed start is just s_r(start).  Power sums of sampled
    contents are accumulated as exact rationals in path order.
    """
    alpha = check_alpha(alpha)
    if steps < 1:
        raise ValueError("steps must be positive")
    if paths < 1:
        raise ValueError("paths must be positive")
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")

    cum_cache: dict[tuple[int, ...], tuple[tuple[int, int, int], ...]] = {}
    power_sums = [Fraction(0)] * (2 * r_max + 1)
    occupancy: dict[str, int] = {}
    dump: list[str] | None = [] if dump_paths else None

    for idx in range(paths):
        rng = _path_rng(seed, idx)
        shape = start
        trail = [str(shape)] if dump is not None and idx < dump_cap else None
        last_content = Fraction(0)
        for _ in range(steps):
            cum = cum_cache.get(shape.parts)
            if cum is None:
                cum = _cumulative_atoms(shape, alpha)
                cum_cache[shape.parts] = cum
            u = rng.getrandbits(64)
            row = cum[-1][0]
            for r, num, den in cum:
                if u * den < num * _WORD:
                    row = r
                    break
            last_content = added_content(shape, alpha, row)
            shape = shape.add_cell(row)
            if trail is not None:
                trail.append(str(shape))
        key = str(shape)
        occupancy[key] = occupancy.get(key, 0) + 1
        acc = Fraction(1)
        for r in range(0, 2 * r_max + 1):
            power_sums[r] += acc
            acc *= last_content
        if trail is not None:
            dump.append("|".join(trail))

    before_final = distribution_after(start, alpha, steps - 1)
    moments = []
    for r in range(0, r_max + 1):
        exact = Fraction(0)
        for state, mass in before_final.items():
            exact += mass * s_r_direct(state, alpha, r)
        mean = power_sums[r] / paths
        second = power_sums[2 * r] / paths
        variance = second - mean * mean
        assert variance >= 0
        se = math.sqrt(float(variance) / paths)
        moments.append(MomentStat(r, float(mean), exact, se))

    occ = tuple(sorted(occupancy.items()))
    return SampleStats(
        steps=steps,
        alpha=alpha,
        paths=paths,
        seed=seed,
        start=start,
        moments=tuple(moments),
        occupancy=occ,
        path_dump=tuple(dump) if dump is not None else None,
    )
