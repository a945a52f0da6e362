import json

import jsonschema
import pytest

from dilations.errors import DomainError
from dilations.harness import (FailureRecord, VerificationReport,
                               crosscheck_extremal_gamma0,
                               crosscheck_extremal_gamma1, verify_counterexample,
                               verify_hereditary, verify_nonextremal)
from dilations.hypergraphs import Hypergraph
from dilations.invariants import check_certificate, domination_number
from importlib import resources


def report_schema():
    text = resources.files("dilations").joinpath(
        "schemas/verification_report.schema.json").read_text()
    return json.loads(text)


class TestSuitesGreen:
    def test_hereditary(self):
        r = verify_hereditary(4, samples_per_graph=2, seed=7)
        assert r.ok
        assert r.pass_count == r.instance_count == 9
        assert r.pass_count + len(r.failures) == r.instance_count

    def test_extremal_gamma1(self):
        r = crosscheck_extremal_gamma1(5)
        assert r.ok and r.pass_count == r.instance_count == 30

    def test_extremal_gamma0(self):
        r = crosscheck_extremal_gamma0(5)
        assert r.ok and r.pass_count == r.instance_count == 30

    def test_nonextremal(self):
        r = verify_nonextremal(4)
        assert r.ok and r.pass_count == r.instance_count

    def test_counterexample(self):
        r = verify_counterexample(4)
        assert r.ok and r.pass_count == r.instance_count == 3

    def test_scale_limits(self):
        with pytest.raises(DomainError):
            verify_hereditary(8)
        with pytest.raises(DomainError):
            crosscheck_extremal_gamma0(9)
        with pytest.raises(DomainError):
            verify_nonextremal(7)
        with pytest.raises(DomainError):
            verify_counterexample(6)


class TestDeterminism:
    def test_reports_byte_identical(self):
        a = verify_hereditary(4, samples_per_graph=1, seed=3)
        b = verify_hereditary(4, samples_per_graph=1, seed=3)
        assert a.to_text() == b.to_text()
        assert a.to_csv() == b.to_csv()
        assert a.to_json() == b.to_json()

    def test_seed_in_report(self):
        r = verify_hereditary(3, seed=9)
        assert r.seed == 9

    def test_parallel_matches_serial(self):
        a = crosscheck_extremal_gamma1(4, jobs=1)
        b = crosscheck_extremal_gamma1(4, jobs=2)
        assert a.to_csv() == b.to_csv()
        assert a.to_json() == b.to_json()


class TestReportFormats:
    def test_json_schema(self):
        r = verify_nonextremal(3)
        jsonschema.validate(json.loads(r.to_json()), report_schema())

    def test_csv_shape(self):
        r = verify_counterexample(3)
        lines = r.to_csv().strip().splitlines()
        assert lines[0] == "suite,instance,status,check,expected,got"
        assert len(lines) == 1 + r.instance_count  # all pass: one row each

    def test_failure_record_rendering(self):
        rec = FailureRecord("n3:Bw", ({"check": "nu", "expected": 1, "got": 2},),
                            {"nu_H": domination_number(Hypergraph(1, [])).to_json()})
        report = VerificationReport("demo", {}, None)
        report.instance_count = 1
        report.failures.append(rec)
        report._instance_keys = ["n3:Bw"]
        text = report.to_text()
        assert "FAIL n3:Bw :: nu" in text
        assert "RESULT: FAIL" in text
        assert not report.ok
        csv_text = report.to_csv()
        assert "fail" in csv_text
        jsonschema.validate(json.loads(report.to_json()), report_schema())

    def test_soft_failures_do_not_fail_report(self):
        rec = FailureRecord("x", ({"check": "c", "expected": 1, "got": 2},),
                            {}, soft=True)
        report = VerificationReport("demo", {}, None)
        report.instance_count = 1
        report.failures.append(rec)
        report._instance_keys = ["x"]
        assert report.ok
        assert "FLAGGED" in report.to_text()


class TestFailureCertificates:
    def test_attached_certificates_recheck(self):
        # build a tiny failing comparison by hand and re-verify its certificate
        h = Hypergraph.from_edge_sets(3, [[0, 1], [1, 2]])
        cert = domination_number(h)
        rec = FailureRecord("demo", ({"check": "gamma", "expected": 9,
                                      "got": cert.value},),
                            {"gamma_H": cert.to_json()})
        stored = rec.certificates["gamma_H"]
        from dilations.invariants import Certificate
        rebuilt = Certificate(stored["parameter"], stored["value"],
                              tuple(stored["witness"]), stored["mode"],
                              stored["node_count"])
        assert check_certificate(h, rebuilt)
