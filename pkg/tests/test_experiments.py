import pytest

from seqcx.experiments import (
    DEFAULT_SCHEDULE,
    EXHAUSTIVE_CAP,
    ExperimentConfig,
    _attainable_t_values,
    chi_square_consistency,
    count_low_expansion,
    draw_element,
    enumerate_all,
    monte_carlo,
    sample_terms,
    tn_ambiguity_scan,
)


def exhaustive(field, n, **kw):
    return ExperimentConfig(field, n, "exhaustive", **kw)


def test_enumerate_n1_distribution(f2):
    res = enumerate_all(exhaustive(f2, 1))
    assert res.record.counts == {0: 1, 1: 1}
    assert res.violations == 0


def test_enumerate_n4_kernel_bound(f2):
    res = enumerate_all(exhaustive(f2, 4))
    assert res.record.total == 16
    assert sum(c for v, c in res.record.counts.items() if v <= 2) == 16
    assert res.violations == 0


def test_enumerate_counts_l_and_t(f2):
    res = enumerate_all(exhaustive(f2, 4))
    assert sum(res.record.counts_l.values()) == 16
    # L=0 only for the zero prefix; L=4 only for [0,0,0,1]
    assert res.record.counts_l[0] == 1
    assert res.record.counts_l[4] == 1


def test_enumerate_cap():
    from seqcx.field import Field

    with pytest.raises(ValueError):
        exhaustive(Field(2), 40)
    assert 2**40 > EXHAUSTIVE_CAP


def test_enumerate_deterministic_across_workers(f2):
    one = enumerate_all(exhaustive(f2, 6))
    two = enumerate_all(exhaustive(f2, 6, workers=3))
    assert one.to_dict() == two.to_dict()


def test_mode_mismatch(f2):
    with pytest.raises(ValueError):
        enumerate_all(ExperimentConfig(f2, 0, "montecarlo", samples=4))
    with pytest.raises(ValueError):
        monte_carlo(exhaustive(f2, 4))
    with pytest.raises(ValueError):
        ExperimentConfig(f2, 4, "nonsense")
    with pytest.raises(ValueError):
        ExperimentConfig(f2, 0, "montecarlo", samples=0)


def test_count_low_expansion_examples(f2):
    probe = count_low_expansion(exhaustive(f2, 4), 1)
    assert (probe.count, probe.reference) == (4, 2)
    assert probe.ratio == 2.0
    assert probe.exploratory
    assert probe.to_dict()["exploratory"] is True

    assert count_low_expansion(exhaustive(f2, 4), 0).count == 1

    wide = count_low_expansion(exhaustive(f2, 10), 2)
    assert wide.reference == 16
    assert wide.count == count_low_expansion(exhaustive(f2, 10), 2).count


def test_draw_element_deterministic_and_in_range(f3):
    values = [draw_element(7, 3, i, 3) for i in range(50)]
    assert values == [draw_element(7, 3, i, 3) for i in range(50)]
    assert all(0 <= v < 3 for v in values)
    assert sample_terms(7, 3, 50, 3) == values
    # different stream, different values
    assert sample_terms(7, 4, 50, 3) != values


def test_monte_carlo_reproducible(f2):
    cfg = ExperimentConfig(f2, 0, "montecarlo", samples=1, seed=123, schedule=(8,))
    first = monte_carlo(cfg).to_dict()
    second = monte_carlo(cfg).to_dict()
    assert first == second


def test_monte_carlo_workers_invariant(f2):
    base = ExperimentConfig(f2, 0, "montecarlo", samples=40, seed=5, schedule=(8, 9))
    split = ExperimentConfig(
        f2, 0, "montecarlo", samples=40, seed=5, schedule=(8, 9), workers=3
    )
    assert monte_carlo(base).to_dict() == monte_carlo(split).to_dict()


def test_monte_carlo_extension_field(f4):
    cfg = ExperimentConfig(f4, 0, "montecarlo", samples=16, seed=3, schedule=(6,))
    result = monte_carlo(cfg)
    record = result.records[6]
    assert record.total == 16
    assert all(0 <= v <= 3 for v in record.counts)  # kernel bound at n=6
    assert result.to_dict() == monte_carlo(cfg).to_dict()


def test_monte_carlo_default_schedule(f2):
    cfg = ExperimentConfig(f2, 0, "montecarlo", samples=1, seed=1)
    assert cfg.resolved_schedule() == DEFAULT_SCHEDULE


def test_monte_carlo_matches_exhaustive_at_small_n(f2):
    # sampled distribution at n=8 vs the exact one over all 256 prefixes
    exact = enumerate_all(exhaustive(f2, 8, checks=False))
    probs = {v: c / exact.record.total for v, c in exact.record.counts.items()}
    mc = monte_carlo(
        ExperimentConfig(f2, 0, "montecarlo", samples=2048, seed=11, schedule=(8,))
    )
    result = chi_square_consistency(mc.records[8].counts, probs, 2048)
    assert result["p_value"] >= 0.01


def test_chi_square_rejects_shifted_distribution():
    observed = {3: 900, 4: 100}
    probs = {3: 0.1, 4: 0.9}
    result = chi_square_consistency(observed, probs, 1000)
    assert result["p_value"] < 1e-6


def test_chi_square_needs_two_bins():
    with pytest.raises(ValueError):
        chi_square_consistency({1: 5}, {1: 1.0}, 5)


def test_attainable_t_examples():
    # [1,1]: L=1, unique recurrence s_{i+1} = s_i, so t = {0}
    assert _attainable_t_values(0b11, 2, 1) == {0}
    # [0,1]: degenerate L=2, any coefficients fit: t in {0,1,2}
    assert _attainable_t_values(0b10, 2, 2) == {0, 1, 2}
    # [1,0]: L=1, forces c_0 = 0, so t = L = 1
    assert _attainable_t_values(0b01, 2, 1) == {1}


def test_tn_scan(f2):
    report = tn_ambiguity_scan(exhaustive(f2, 6))
    d = report.to_dict()
    assert d["zero_skipped"] == 1
    assert d["singleton_t"] + d["ambiguous_t"] + 1 == 64
    # the canonical choice never violates the prefix bounds on this sweep
    assert d["canonical_choice_failures"] == 0
    assert d["bounds_hold_for_all_choices"] + d["bounds_fail_for_some_choice"] == 63


def test_tn_scan_guards(f2, f3):
    with pytest.raises(ValueError):
        tn_ambiguity_scan(exhaustive(f3, 4))
    with pytest.raises(ValueError):
        tn_ambiguity_scan(exhaustive(f2, 12))


def test_records_serialize_canonically(f2):
    res = enumerate_all(exhaustive(f2, 5))
    d = res.record.to_dict()
    assert d["counts"] == sorted(d["counts"])
    assert sum(c for _, c in d["counts"]) == d["total"]
    assert set(d["stats"]) == {"mean_ratio", "median_ratio", "min_ratio"}


def test_e16_fixture_low_bins_against_direct_oracle(f2):
    # the frozen E_16 distribution's bins {0, 1, 2} recounted straight from
    # the definition, with no shared linear algebra
    import json
    from pathlib import Path

    from oracles import count_low_expansion_gf2_direct

    fixture = json.loads(
        (Path(__file__).parent / "fixtures" / "e16_q2_distribution.json").read_text()
    )
    low = sum(c for v, c in fixture["counts"] if v <= 2)
    assert count_low_expansion_gf2_direct(16) == low == 1040


def test_tn_scan_full_cap(f2):
    # within the scan's whole admissible range, the prefix bounds hold for
    # every attainable shortest-recurrence choice, not just the canonical one
    report = tn_ambiguity_scan(exhaustive(f2, 8))
    d = report.to_dict()
    assert d["canonical_choice_failures"] == 0
    assert d["bounds_fail_for_some_choice"] == 0
    assert d["bounds_hold_for_all_choices"] == 255
