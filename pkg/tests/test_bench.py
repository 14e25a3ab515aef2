"""
Tests for the rate benchmark harness.
"""

import pytest

from app.config import AC_FIXTURE_PATH
from app.schemas.report import BenchSpec, RateReport
from app.schemas.source import GaussianSourceConfig
from app.services.bench import SUMMARY_SCHEMA, read_report, render_report, run_bench, write_report

SMALL_GAUSSIAN = GaussianSourceConfig(realizations=3, samples_per_realization=10000)


@pytest.fixture(scope="module")
def gaussian_report() -> RateReport:
    return run_bench(BenchSpec(gaussian=SMALL_GAUSSIAN))


def test_gaussian_orderings(gaussian_report):
    """Per realization: entropy bounds, the quaternary optimum and the sub-ternary rate of SFC."""
    for r in gaussian_report.realizations:
        h4 = r.rate("huffman4").expected_length
        sfc = r.rate("sfc").expected_length
        constrained = r.rate("huffman4-constrained").expected_length
        goldman = r.rate("goldman").expected_length
        assert r.entropy_4 <= h4 + 1e-9
        assert h4 <= sfc + 1e-9
        assert h4 <= constrained + 1e-9
        assert sfc < r.entropy_3
        assert sfc < constrained
        assert constrained <= goldman + 1e-9
        assert r.entropy_3 <= goldman + 1e-9


def test_gaussian_homopolymer_figures(gaussian_report):
    for r in gaussian_report.realizations:
        for name in ("sfc", "huffman4-constrained"):
            rate = r.rate(name)
            assert rate.codeword_max_run <= 3
            assert rate.stream_max_run is not None
        assert r.rate("goldman").stream_max_run == 1


def test_summary_matches_realizations(gaussian_report):
    lengths = [r.rate("sfc").expected_length for r in gaussian_report.realizations]
    assert gaussian_report.summary["L_sfc"].mean == pytest.approx(sum(lengths) / len(lengths))
    assert set(gaussian_report.summary) == {"H3", "H4", "L_huffman4", "L_sfc", "L_huffman4-constrained", "L_goldman"}


def test_gaussian_means_near_reference_figures(gaussian_report):
    s = {key: stat.mean for key, stat in gaussian_report.summary.items()}
    assert s["H4"] == pytest.approx(3.48, abs=0.15)
    assert s["L_huffman4"] == pytest.approx(3.56, abs=0.15)
    assert s["H3"] == pytest.approx(4.39, abs=0.15)
    assert s["L_goldman"] == pytest.approx(4.45, abs=0.15)
    assert s["L_huffman4"] < s["L_sfc"] < s["L_huffman4-constrained"] <= s["L_goldman"]


def test_h2_column_only_with_binary_huffman():
    source = GaussianSourceConfig(realizations=1, samples_per_realization=2000)
    spec = BenchSpec(gaussian=source, coders=("sfc", "huffman2"))
    report = run_bench(spec)
    assert report.summary["H2"].mean == pytest.approx(report.realizations[0].entropy_2)
    assert report.summary["L_huffman2"].mean >= report.summary["H2"].mean - 1e-9
    assert "H2" in render_report(report).splitlines()[1]


def test_parallel_run_matches_serial(gaussian_report):
    parallel = run_bench(BenchSpec(gaussian=SMALL_GAUSSIAN, jobs=2))
    assert parallel.model_dump() == gaussian_report.model_dump()


@pytest.mark.parametrize("max_hl", [2, 3, 4])
def test_ac_fixture_exact_orderings(max_hl):
    spec = BenchSpec(source="table-file", table_file=AC_FIXTURE_PATH, exact=True, max_hl=max_hl)
    (r,) = run_bench(spec).realizations
    h4 = r.rate("huffman4").expected_length
    sfc = r.rate("sfc").expected_length
    assert h4 <= sfc + 1e-9
    constrained = r.rate("huffman4-constrained").expected_length
    goldman = r.rate("goldman").expected_length
    assert h4 < sfc < r.entropy_3 < constrained < goldman
    assert r.rate("sfc").stream_max_run is None
    assert r.rate("sfc").codeword_max_run <= max_hl


def test_sfc_rate_drops_as_limit_relaxes():
    rates = []
    for max_hl in (2, 3, 4):
        spec = BenchSpec(source="table-file", exact=True, max_hl=max_hl, coders=("sfc",))
        rates.append(run_bench(spec).realizations[0].rate("sfc").expected_length)
    assert rates[0] >= rates[1] >= rates[2]


def test_sampled_table_source_is_seeded():
    spec = BenchSpec(source="table-file", samples=2000, realizations=2, coders=("sfc", "huffman2"))
    first = run_bench(spec)
    assert first.model_dump() == run_bench(spec).model_dump()
    assert first.realizations[0].origin != first.realizations[1].origin
    assert first.realizations[0].rate("huffman2").stream_max_run is None


def test_spec_rejects_bad_selection(tmp_path):
    with pytest.raises(ValueError):
        BenchSpec(coders=("sfc", "arithmetic"))
    with pytest.raises(ValueError):
        BenchSpec(exact=True)
    with pytest.raises(ValueError):
        BenchSpec(source="table-file", table_file=tmp_path / "missing.csv")
    assert BenchSpec(coders=("sfc", "sfc")).coders == ("sfc",)


def test_report_files(tmp_path, gaussian_report):
    paths = write_report(gaussian_report, tmp_path)
    lines = paths["summary"].read_text().splitlines()
    assert lines[0] == SUMMARY_SCHEMA
    assert lines[1] == "statistic,H4,L_huffman4,L_sfc,L_huffman4-constrained,H3,L_goldman"
    assert [line.split(",")[0] for line in lines[2:]] == ["mean", "std"]
    rates = paths["rates"].read_text().splitlines()
    assert len(rates) == 2 + 3 * 4
    assert read_report(paths["json"]) == gaussian_report


def test_render_report_passes(gaussian_report):
    text = render_report(gaussian_report)
    assert "FAIL" not in text
    assert "ok   L(sfc) < L(huffman4-constrained)" in text
    assert "H2" not in text
    assert "ok   L(sfc) < H3" in text


if __name__ == "__main__":
    pytest.main([__file__])
