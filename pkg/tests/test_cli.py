"""Command-line interface: exit codes, output text, and argument parsing."""

import json
from fractions import Fraction

import pytest

from finsum import cli
from finsum.cli import UsageError, main, parse_grid
from finsum.field import HalfInt


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


GOOD_CLOSED = {
    "name": "alt-binom-basic",
    "status": "verified",
    "lhs": {"kind": "closed", "sums": [
        {"coeff": "sign(k)*binom(n, k)/(k + 1)", "lower": "0", "upper": "n"}]},
    "rhs": {"kind": "closed", "expr": "1/(n + 1)"},
    "n": [0, 8],
}

STANDARD = {
    "name": "binomial-theorem-basic",
    "status": "verified",
    "lhs": {"kind": "standard", "terms": [
        {"coeff": "binom(n, k)", "t_exp": [1, 0, 0],
         "base": "1-t", "base_exp": [-1, 1, 0], "lower": "0", "upper": "n"}]},
    "rhs": {"kind": "standard", "terms": [{"coeff": "1"}]},
    "n": [0, 8],
}

PLUS_T = {
    "name": "plus-t-seed",
    "status": "verified",
    "lhs": {"kind": "standard", "terms": [
        {"coeff": "kron(n, k)", "base": "1+t", "base_exp": [1, 0, 0],
         "lower": "0", "upper": "n"}]},
    "rhs": {"kind": "standard", "terms": [
        {"coeff": "binom(n, k)", "t_exp": [1, 0, 0], "lower": "0", "upper": "n"}]},
    "n": [0, 8],
}


def write(tmp_path, doc, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestParseGrid:
    def test_ranges_and_lists(self):
        assert parse_grid("1,2,5/2") == [HalfInt(2), HalfInt(4), HalfInt(5)]
        assert parse_grid("0..2") == [HalfInt(0), HalfInt(2), HalfInt(4)]
        assert parse_grid("1..2:1/2") == [HalfInt(2), HalfInt(3), HalfInt(4)]
        assert parse_grid("-1..0") == [HalfInt(-2), HalfInt(0)]

    def test_rejections(self):
        with pytest.raises(UsageError):
            parse_grid("0..2:2")
        with pytest.raises(UsageError):
            parse_grid("x")
        with pytest.raises(UsageError):
            parse_grid("1/3")


class TestEval:
    def test_exact_output(self, capsys):
        code, out, _ = run(capsys, "eval", "H(5/2)")
        assert code == 0
        assert out.strip() == "46/15 - 2*L"

    def test_bindings(self, capsys):
        code, out, _ = run(capsys, "eval",
                           "sum(k,0,n,sign(k)*binom(n,k)/(k+1))", "--bind", "n=4")
        assert code == 0
        assert out.strip() == "1/5"

    def test_half_binding(self, capsys):
        code, out, _ = run(capsys, "eval", "binom(n, 2)", "--bind", "n=5/2")
        assert code == 0
        assert out.strip() == "15/8"

    def test_float_flag(self, capsys):
        code, out, _ = run(capsys, "eval", "H(1/2)", "--float")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "2 - 2*L"
        assert abs(float(lines[1]) - 0.6137056388801094) < 1e-12

    def test_usage_errors_exit_2(self, capsys):
        assert run(capsys, "eval", "1 +")[0] == 2          # syntax
        assert run(capsys, "eval", "H(n)")[0] == 2         # unbound
        assert run(capsys, "eval", "H(n)", "--bind", "n=-2")[0] == 2  # pole
        assert run(capsys, "eval", "1/n", "--bind", "n=0")[0] == 2    # div zero
        assert run(capsys, "eval", "1", "--bind", "q=1")[0] == 2      # bad var
        assert run(capsys, "nosuchcommand")[0] == 2


class TestVerify:
    def test_matching_entry_exits_0(self, capsys, tmp_path):
        path = write(tmp_path, GOOD_CLOSED)
        code, out, _ = run(capsys, "verify", path)
        assert code == 0
        assert "ok " in out and "1 entry, 0 mismatched" in out

    def test_mismatch_exits_1(self, capsys, tmp_path):
        doc = dict(GOOD_CLOSED)
        doc["rhs"] = {"kind": "closed", "expr": "2/(n + 1)"}
        path = write(tmp_path, doc)
        code, out, _ = run(capsys, "verify", path)
        assert code == 1
        assert "FAIL" in out

    def test_json_format(self, capsys, tmp_path):
        path = write(tmp_path, GOOD_CLOSED)
        code, out, _ = run(capsys, "verify", path, "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data[0]["name"] == "alt-binom-basic"
        assert data[0]["matched"] is True

    def test_bad_document_exits_3(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert run(capsys, "verify", str(path))[0] == 3
        path2 = write(tmp_path, {"name": "x"}, "missing.json")
        assert run(capsys, "verify", path2)[0] == 3

    def test_inadmissible_parameters_exit_2(self, capsys, tmp_path):
        path = write(tmp_path, GOOD_CLOSED)
        assert run(capsys, "verify", path, "--s", "0")[0] == 2
        assert run(capsys, "verify", path, "--r", "-2")[0] == 2
        assert run(capsys, "verify", path, "--s", "-1")[0] == 2

    def test_n_override(self, capsys, tmp_path):
        path = write(tmp_path, GOOD_CLOSED)
        code, out, _ = run(capsys, "verify", path, "--n", "0..3")
        assert code == 0


class TestTransform:
    def test_beta_prints_weights(self, capsys, tmp_path):
        path = write(tmp_path, STANDARD)
        code, out, _ = run(capsys, "transform", path, "--op", "beta")
        assert code == 0
        assert "beta_transform(binomial-theorem-basic)" in out
        assert "1/binom(k + r, k + s)" not in out  # this seed has b = n - k
        assert "1/binom(n + r, k + s)" in out
        assert "1/(k + s)" in out

    def test_beta_check_exits_0(self, capsys, tmp_path):
        path = write(tmp_path, STANDARD)
        code, out, _ = run(capsys, "transform", path, "--op", "beta",
                           "--check", "--n", "0..6")
        assert code == 0
        assert "check: equal" in out

    def test_chained_derivative_check(self, capsys, tmp_path):
        path = write(tmp_path, STANDARD)
        code, out, _ = run(capsys, "transform", path, "--op", "beta,dds",
                           "--check", "--n", "0..5",
                           "--r", "1,2", "--s", "1,2")
        assert code == 0
        assert "d/ds(beta_transform(binomial-theorem-basic))" in out
        assert "H(" in out  # harmonic bracket rendered

    def test_unflipped_base_exits_4_with_hint(self, capsys, tmp_path):
        path = write(tmp_path, PLUS_T)
        code, _, err = run(capsys, "transform", path, "--op", "beta")
        assert code == 4
        assert "--negate-t" in err

    def test_negate_t_fixes_it(self, capsys, tmp_path):
        path = write(tmp_path, PLUS_T)
        code, out, _ = run(capsys, "transform", path, "--op", "beta",
                           "--negate-t", "--check", "--n", "0..5")
        assert code == 0
        assert "check: equal" in out

    def test_central_v(self, capsys, tmp_path):
        path = write(tmp_path, PLUS_T)
        code, out, _ = run(capsys, "transform", path, "--op", "central_v",
                           "--v", "1", "--check", "--n", "0..6")
        assert code == 0
        assert "central_v(plus-t-seed, v=1)" in out
        assert "central_v_dual(plus-t-seed, v=1)" in out
        assert out.count("check: equal") == 2

    def test_central_uv_needs_params(self, capsys, tmp_path):
        path = write(tmp_path, PLUS_T)
        assert run(capsys, "transform", path, "--op", "central_uv")[0] == 2
        assert run(capsys, "transform", path, "--op", "central_uv",
                   "--u", "1/2", "--v", "0")[0] == 2
        code, out, _ = run(capsys, "transform", path, "--op", "central_uv",
                           "--u", "1", "--v", "0", "--check", "--n", "0..5")
        assert code == 0
        assert "check: equal" in out

    def test_unknown_op_exits_2(self, capsys, tmp_path):
        path = write(tmp_path, STANDARD)
        assert run(capsys, "transform", path, "--op", "gamma")[0] == 2

    def test_dds_without_beta_exits_4(self, capsys, tmp_path):
        path = write(tmp_path, STANDARD)
        assert run(capsys, "transform", path, "--op", "dds")[0] == 4


class TestCorpusCommand:
    def test_run_subset(self, capsys):
        code, out, _ = run(capsys, "corpus", "run",
                           "--name", "binomial-theorem",
                           "--name", "alt-recip-shift", "--jobs", "2")
        assert code == 0
        assert "2 entries, 0 mismatched" in out

    def test_status_filter(self, capsys):
        code, out, _ = run(capsys, "corpus", "run",
                           "--status", "erratum_claimed")
        assert code == 0
        assert "expected=unequal actual=unequal" in out
