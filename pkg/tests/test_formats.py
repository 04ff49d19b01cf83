import json

import numpy as np
import pytest

from corrkit import Sequence, chu, decompose_gauss_sum, psc, rudin_shapiro_pair
from corrkit.errors import FormatError
from corrkit.formats import (
    format_sequence,
    gauss_json,
    parse_sequence,
    read_sequence,
    report_json,
    write_sequence,
)

from conftest import random_unimodular


class TestSequenceFormat:
    def test_phase_exact_header(self):
        text = format_sequence(chu(4, 1))
        lines = text.strip().split("\n")
        assert lines[0] == "UNIMODULAR-PHASE 4 4"
        assert lines[1:] == ["0", "1", "4", "1"]

    def test_complex_header(self, rng):
        s = Sequence.from_entries(rng.normal(size=3) + 1j * rng.normal(size=3))
        lines = format_sequence(s).strip().split("\n")
        assert lines[0] == "COMPLEX 3"
        assert len(lines) == 4

    def test_phase_exact_roundtrip_is_bitexact(self, tmp_path):
        for s in (chu(13, 5), rudin_shapiro_pair(4)[0]):
            path = tmp_path / "seq.txt"
            write_sequence(s, path)
            back = read_sequence(path)
            assert back.phase_modulus == s.phase_modulus
            assert np.array_equal(back.phases, s.phases)
            assert np.array_equal(back.entries, s.entries)

    def test_complex_roundtrip_is_lossless(self, rng, tmp_path):
        s = Sequence.from_entries(rng.normal(size=17) + 1j * rng.normal(size=17))
        path = tmp_path / "seq.txt"
        write_sequence(s, path)
        assert np.array_equal(read_sequence(path).entries, s.entries)

    def test_unimodular_roundtrip_tolerance(self, rng, tmp_path):
        s = Sequence.from_entries(random_unimodular(rng, 9))
        path = tmp_path / "seq.txt"
        write_sequence(s, path)
        assert np.max(np.abs(read_sequence(path).entries - s.entries)) <= 1e-12

    @pytest.mark.parametrize("text", [
        "",
        "WAT 3\n1\n2\n3\n",
        "COMPLEX x\n",
        "COMPLEX 2\n1 0\n",
        "COMPLEX 1\n1\n",
        "COMPLEX 1\none two\n",
        "UNIMODULAR-PHASE 4\n0\n",
        "UNIMODULAR-PHASE 4 2\n0\n1\n2\n",
        "UNIMODULAR-PHASE 4 1\n0.5\n",
    ])
    def test_malformed_rejected(self, text):
        with pytest.raises(FormatError):
            parse_sequence(text)

    def test_phases_canonicalised_on_read(self):
        s = parse_sequence("UNIMODULAR-PHASE 4 2\n-1\n9\n")
        assert list(s.phases) == [7, 1]


class TestReportJson:
    def test_keys_and_parseability(self):
        a, b = rudin_shapiro_pair(3)
        report = psc(a, b)
        for indent in (False, True):
            data = json.loads(report_json(report, indent=indent))
            assert list(data) == ["adf_a", "adf_b", "cdf", "psc",
                                  "bound_lower_slack", "bound_upper_slack", "golay_defect"]
            assert data["psc"] == pytest.approx(1.0, abs=1e-10)

    def test_17_digits_roundtrip(self):
        a, b = rudin_shapiro_pair(5)
        report = psc(a, b)
        data = json.loads(report_json(report))
        assert data["cdf"] == report.cdf


class TestGaussJson:
    def test_total_only(self):
        data = json.loads(gauss_json(4, 0.5, 0.0, complex(1.25, -2.5)))
        assert data["N"] == 4
        assert data["total"] == [1.25, -2.5]
        assert "M" not in data

    def test_decomposition_fields(self):
        d = decompose_gauss_sum(48, 2 / 64, 16 / 64)
        data = json.loads(gauss_json(d.N, d.x, d.theta, d.total, d, indent=True))
        for key in ("M", "epsilon", "mu", "main_term", "half_mu_term",
                    "e_terms", "g_terms", "remainder", "total"):
            assert key in data
        assert data["M"] == 2
        assert data["epsilon"] == pytest.approx(-0.25)
        assert data["remainder"] == [d.remainder.real, d.remainder.imag]
