"""Growth kernels, dimension recurrences, and the seeded sampler."""

import math
from fractions import Fraction

import pytest

from ycalc.growth import (
    DimensionTable,
    GrowthKernel,
    MomentStat,
    added_content,
    cotransition_from_dimensions,
    cotransition_kernel,
    distribution_after,
    exact_cotransition_moment,
    exact_transition_moment,
    plancherel_check,
    removed_content,
    sample_growth,
    tableau_counts,
    transition_kernel,
)
from ycalc.moments import s_r_direct
from ycalc.partitions import EMPTY, Partition, enumerate_partitions, partitions_upto

ALPHAS = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 5))


def _hook_length_count(la: Partition) -> int:
    """f_la by the hook length formula, independent of any recurrence."""
    if not la.weight:
        return 1
    conj = la.conjugate()
    denom = 1
    for i, j in la.cells():
        denom *= (la.part(i) - j) + (conj.part(j) - i) + 1
    q, r = divmod(math.factorial(la.weight), denom)
    assert r == 0
    return q


def test_tableau_counts_match_hook_lengths():
    f = tableau_counts(8)
    for la, count in f.items():
        assert count == _hook_length_count(la), la
    assert f[Partition((4, 2, 1))] == _hook_length_count(Partition((4, 2, 1)))


def test_transition_kernel_shape():
    k = transition_kernel(Partition((2, 1)), Fraction(2))
    assert k.direction == "up"
    assert k.base == Partition((2, 1))
    assert {i for i, _ in k.atoms} == {1, 2, 3}
    assert k.probability(2) > 0
    assert k.probability(7) == 0


def test_cotransition_requires_cells():
    with pytest.raises(ValueError, match="no co-transition from the empty shape"):
        cotransition_kernel(EMPTY, Fraction(1))
    with pytest.raises(ValueError, match="no co-transition from the empty shape"):
        cotransition_from_dimensions(EMPTY, Fraction(1))


def test_kernel_normalization_is_enforced():
    with pytest.raises(AssertionError):
        GrowthKernel(EMPTY, Fraction(1), "up", ((1, Fraction(1, 2)),))


@pytest.mark.parametrize("alpha", ALPHAS)
def test_cotransition_factorizes_through_dimensions(alpha):
    table = DimensionTable(alpha)
    for la in partitions_upto(6):
        if not la.weight:
            continue
        direct = cotransition_kernel(la, alpha)
        via_dim = cotransition_from_dimensions(la, alpha, table)
        assert direct.atoms == via_dim.atoms, la


def test_dimension_table_at_alpha_one():
    table = DimensionTable(Fraction(1))
    f = tableau_counts(6)
    for la in partitions_upto(6):
        assert table.dimension(la) == Fraction(
            f[la] ** 2, math.factorial(la.weight)
        )


def test_plancherel_reduction():
    assert plancherel_check(6)


def test_added_and_removed_content():
    la = Partition((3, 1))
    alpha = Fraction(2)
    assert added_content(la, alpha, 1) == 3
    assert added_content(la, alpha, 3) == -Fraction(2, 2)
    assert removed_content(la, alpha, 1) == 2
    assert removed_content(la, alpha, 2) == -Fraction(1, 2)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_exact_moments_cross_checked(alpha):
    for la in partitions_upto(5):
        for r in range(5):
            assert exact_transition_moment(la, alpha, r) == s_r_direct(la, alpha, r)
            if la.weight:
                exact_cotransition_moment(la, alpha, r)  # asserts internally


def test_distribution_after_two_steps():
    dist = distribution_after(EMPTY, Fraction(1), 2)
    assert dist == {
        Partition((2,)): Fraction(1, 2),
        Partition((1, 1)): Fraction(1, 2),
    }
    # general alpha: the split is 1/(alpha+1) beside, alpha/(alpha+1) below
    alpha = Fraction(3, 5)
    dist = distribution_after(EMPTY, alpha, 2)
    assert dist[Partition((2,))] == 1 / (alpha + 1)
    assert dist[Partition((1, 1))] == alpha / (alpha + 1)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_distribution_mass_is_conserved(alpha):
    for steps in range(5):
        dist = distribution_after(EMPTY, alpha, steps)
        assert sum(dist.values(), Fraction(0)) == 1
        assert all(la.weight == steps for la in dist)


def test_sampler_is_deterministic():
    a = sample_growth(steps=3, alpha=Fraction(1), paths=200, seed=99)
    b = sample_growth(steps=3, alpha=Fraction(1), paths=200, seed=99)
    assert a == b
    c = sample_growth(steps=3, alpha=Fraction(1), paths=200, seed=100)
    assert c != a


def test_sampler_paths_are_independent_of_the_batch():
    # per-path generators: the first paths of a bigger run are identical
    small = sample_growth(
        steps=2, alpha=Fraction(1), paths=3, seed=7, dump_paths=True
    )
    big = sample_growth(
        steps=2, alpha=Fraction(1), paths=8, seed=7, dump_paths=True
    )
    assert big.path_dump[:3] == small.path_dump


def test_sampler_single_step_moments_are_exact_targets():
    start = Partition((3, 1))
    stats = sample_growth(
        steps=1, alpha=Fraction(2), paths=500, seed=5, start=start, r_max=3
    )
    assert stats.paths == 500
    for m in stats.moments:
        assert m.exact == s_r_direct(start, Fraction(2), m.r)
    # moment 0 is measured exactly
    assert stats.moments[0].estimate == 1.0
    assert stats.moments[0].std_error == 0.0
    assert stats.moments[0].within(4)


def test_sampler_occupancy_and_dump_format():
    stats = sample_growth(
        steps=2, alpha=Fraction(1), paths=50, seed=11, dump_paths=True
    )
    assert sum(count for _, count in stats.occupancy) == 50
    assert all(Partition.from_string(name).weight == 2 for name, _ in stats.occupancy)
    assert list(stats.occupancy) == sorted(stats.occupancy)
    for trail in stats.path_dump:
        steps = trail.split("|")
        assert steps[0] == "0"
        assert len(steps) == 3


def test_sampler_dump_cap():
    stats = sample_growth(
        steps=1, alpha=Fraction(1), paths=30, seed=1, dump_paths=True, dump_cap=10
    )
    assert len(stats.path_dump) == 10


def test_sampler_argument_errors():
    with pytest.raises(ValueError, match="steps must be positive"):
        sample_growth(steps=0, alpha=Fraction(1), paths=1, seed=0)
    with pytest.raises(ValueError, match="paths must be positive"):
        sample_growth(steps=1, alpha=Fraction(1), paths=0, seed=0)
    with pytest.raises(ValueError, match="alpha must be positive"):
        sample_growth(steps=1, alpha=Fraction(-1), paths=1, seed=0)


def test_moment_stat_within():
    m = MomentStat(r=1, estimate=1.5, exact=Fraction(1), std_error=0.2)
    assert m.within(4)
    assert not m.within(2)
    exact_hit = MomentStat(r=0, estimate=1.0, exact=Fraction(1), std_error=0.0)
    assert exact_hit.within(0)
