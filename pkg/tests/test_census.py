"""Census sweeps: exhaustive counts, sampling, CSV persistence, findings."""

import pytest

from gorquad.census import (CSV_HEADER, H2_SUPPORT_R6, CensusConfig,
                            CensusRecord, _build_worker_state, _sweep_one,
                            form_from_index, h2_13_exclusion_check,
                            records_to_csv, run_census, squarefree_quadric_keys,
                            summary_markdown, verify_socle4_duality)
from gorquad.core import FieldSpec
from gorquad.invariants import HVector, QuadricClassification
from gorquad.poly import ring

from conftest import GF2, GF3, GFBIG


@pytest.fixture(scope="module")
def r4_sweep():
    cfg = CensusConfig(field=GF2, r=4)
    records, summary = run_census(cfg)
    return cfg, records, summary


def test_exhaustive_r4_counts(r4_sweep):
    _, records, summary = r4_sweep
    assert summary.total_swept == 63
    assert summary.total_skipped == 0
    assert summary.total_presented == 28
    assert summary.counts == {1: 28}
    assert summary.findings == ()
    assert len(records) == 63
    assert [rec.f_index for rec in records] == list(range(1, 64))


def test_presented_records_have_socle_degree_r_minus_2(r4_sweep):
    _, records, _ = r4_sweep
    for rec in records:
        if rec.presented:
            assert rec.classification.hvector == HVector((1, 4, 1))
            assert rec.h2 == 1


def test_form_from_index_enumerates_squarefree_sums():
    R = ring(GF2, 4)
    keys = squarefree_quadric_keys(R)
    assert len(keys) == 6
    forms = {str(form_from_index(R, keys, m)) for m in range(1, 64)}
    assert len(forms) == 63
    assert len(form_from_index(R, keys, 0b101).terms) == 2


def test_sampled_census_is_seed_deterministic():
    cfg = CensusConfig(field=GF2, r=5, mode="random_sample",
                       sample_count=120, sample_seed=9)
    rec_a, sum_a = run_census(cfg)
    rec_b, sum_b = run_census(cfg)
    assert records_to_csv(cfg, rec_a) == records_to_csv(cfg, rec_b)
    assert sum_a.counts == sum_b.counts
    assert sum_a.total_swept + sum_a.total_skipped == 120
    other = run_census(CensusConfig(field=GF2, r=5, mode="random_sample",
                                    sample_count=120, sample_seed=10))[1]
    assert other.counts != sum_a.counts or \
        other.total_presented != sum_a.total_presented


def test_sampled_skip_reasons_are_explained():
    # samples draw every degree-2 coefficient, so covers and zero forms occur
    cfg = CensusConfig(field=GF2, r=3, mode="random_sample",
                       sample_count=200, sample_seed=1)
    records, summary = run_census(cfg)
    skipped = [rec for rec in records if rec.presented is None]
    assert skipped, "200 draws over nine GF(2) coefficients must hit the cover"
    assert {rec.skip_reason for rec in skipped} <= {
        "the zero form", "the form lies in the cover"}
    assert all(rec.seed == 1 for rec in records)


def test_sweep_one_skip_payloads_directly():
    cfg = CensusConfig(field=GF2, r=3, mode="random_sample",
                       sample_count=1, sample_seed=0)
    state = _build_worker_state(cfg)
    R = state["ring"]
    width = len(R.monomials_of_degree(2))
    zero = _sweep_one(state, (0, (0,) * width))
    assert zero[2] == "skipped" and zero[6] == "the zero form"
    # a pure square lies in the cover of variable squares
    square_pos = [i for i, k in enumerate(R.monomials_of_degree(2))
                  if max(R.codec.exps(k)) == 2][0]
    coeffs = [0] * width
    coeffs[square_pos] = 1
    cover = _sweep_one(state, (1, tuple(coeffs)))
    assert cover[2] == "skipped" and cover[6] == "the form lies in the cover"


def test_parallel_sweep_is_byte_identical(r4_sweep):
    cfg, records, _ = r4_sweep
    cfg2 = CensusConfig(field=GF2, r=4, parallelism=2)
    records2, summary2 = run_census(cfg2)
    assert records_to_csv(cfg, records) == records_to_csv(cfg, records2)
    assert summary2.total_presented == 28


def test_csv_layout(r4_sweep):
    cfg, records, _ = r4_sweep
    text = records_to_csv(cfg, records)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 64
    first = lines[1].split(",")
    assert first[0] == "2" and first[1] == "4"
    assert first[2] == "monomial" and first[3] == ""  # ci_seed only for random
    assert first[7] in ("True", "False", "skipped", "error")


def test_h2_13_exclusion(r4_sweep):
    _, records, _ = r4_sweep
    assert h2_13_exclusion_check(records)
    assert h2_13_exclusion_check([])
    fake = CensusRecord(
        f_index=9, F=ring(GF2, 4).parse("x1*x2"),
        classification=QuadricClassification(
            hvector=HVector((1, 6, 13, 6, 1)), socle_tuple=None,
            generator_counts={2: 8}, gorenstein=None,
            presented_by_quadrics=True),
        presented=True, h2=13)
    assert not h2_13_exclusion_check(list(records) + [fake])


def test_socle4_duality_roundtrip(r4_sweep):
    cfg, records, _ = r4_sweep
    presented = next(rec for rec in records if rec.presented)
    assert verify_socle4_duality(cfg, presented)
    skipped = CensusRecord(f_index=0, F=ring(GF2, 4).parse("x1*x2"),
                           classification=None, presented=None, h2=None,
                           skip_reason="the zero form")
    assert verify_socle4_duality(cfg, skipped)


def test_socle4_duality_with_random_cover():
    cfg = CensusConfig(field=GFBIG, r=4, ci_style="random", ci_seed=5,
                       mode="random_sample", sample_count=6, sample_seed=2)
    records, summary = run_census(cfg)
    presented = [rec for rec in records if rec.presented]
    assert presented, "generic quadrics over a big field should colon cleanly"
    assert verify_socle4_duality(cfg, presented[0])


def test_summary_markdown_layout(r4_sweep):
    _, _, summary = r4_sweep
    text = summary_markdown(summary)
    assert "| h2 | presented |" in text
    assert "| 1 | 28 |" in text
    assert "- presented by quadrics: 28" in text
    assert "- swept: 63" in text
    assert "presented share: 0.4444" in text
    assert "Findings" not in text


def test_summary_markdown_r6_always_lists_known_support():
    cfg = CensusConfig(field=GF2, r=6, mode="random_sample",
                       sample_count=25, sample_seed=4)
    _, summary = run_census(cfg)
    text = summary_markdown(summary)
    for h2 in H2_SUPPORT_R6:
        assert f"| {h2} |" in text
    assert "forms: 25 sampled, seed 4" in text


def test_config_validation():
    with pytest.raises(ValueError):
        CensusConfig(field=GF2, r=1)
    with pytest.raises(ValueError):
        CensusConfig(field=GF2, ci_style="sparse")
    with pytest.raises(ValueError):
        CensusConfig(field=GF2, mode="all")
    with pytest.raises(ValueError):
        CensusConfig(field=GF3)  # exhaustive sweep is GF(2)-only
    with pytest.raises(ValueError):
        CensusConfig(field=GF2, mode="random_sample", sample_count=0)
    with pytest.raises(ValueError):
        CensusConfig(field=GF2, parallelism=0)
