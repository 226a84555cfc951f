"""Command-line behaviour: formats, exit codes and fixture round-trips."""

import json
from fractions import Fraction

from rbx.cli import main
from rbx.operators import AnalyticOp, TruncOp
from rbx.poly import Poly


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_analytic_operator_passes(self, tmp_path, capsys):
        path = write(tmp_path, "op.json", {"a": "1/2", "r": "x^2 + 1"})
        code, out, _ = run(capsys, ["verify", path, "--degree", "8"])
        assert code == 0
        assert json.loads(out)["holds"] is True

    def test_identity_operator_fails_at_origin(self, tmp_path, capsys):
        trunc = TruncOp(tuple(Poly.monomial(n) for n in range(9)))
        path = write(tmp_path, "ident.json", trunc.to_json())
        code, out, _ = run(capsys, ["verify", path, "--degree", "2"])
        assert code == 1
        assert json.loads(out)["first_failure"] == [0, 0]

    def test_nonzero_weight(self, tmp_path, capsys):
        path = write(tmp_path, "op.json", {"a": "0", "r": "1"})
        code, out, _ = run(capsys, ["verify", path, "--lambda", "1", "--degree", "2"])
        assert code == 1

    def test_malformed_polynomial(self, tmp_path, capsys):
        path = write(tmp_path, "bad.json", {"a": "0", "r": "x^^2"})
        code, _, err = run(capsys, ["verify", path])
        assert code == 2
        assert "error" in err

    def test_malformed_json(self, tmp_path, capsys):
        path = write(tmp_path, "bad.json", "{not json")
        code, _, _ = run(capsys, ["verify", path])
        assert code == 2


class TestCanon:
    def test_linear_multiplier_point(self, tmp_path, capsys):
        trunc = AnalyticOp(2, Poly.x()).truncate(4)
        path = write(tmp_path, "trunc.json", trunc.to_json())
        code, out, _ = run(capsys, ["canon", path])
        assert code == 0
        assert json.loads(out) == {"a": "2", "r": "x"}

    def test_odd_halving_rejected(self, tmp_path, capsys):
        from rbx.operators import odd_halving_example

        path = write(tmp_path, "odd.json", odd_halving_example(4).to_json())
        code, _, err = run(capsys, ["canon", path])
        assert code == 1
        assert "NotMultiplierType" in err

    def test_canon_emit_round_trip(self, tmp_path, capsys):
        op = AnalyticOp(Fraction(-3, 2), Poly((1, 0, Fraction(2, 5))))
        path = write(tmp_path, "trunc.json", op.truncate(4).to_json())
        code, out, _ = run(capsys, ["canon", path])
        assert code == 0
        assert AnalyticOp.from_json(json.loads(out)) == op


class TestFunctional:
    def test_system(self, capsys):
        code, out, _ = run(capsys, ["functional", "system", "r=1", "n=0", "m=0"])
        assert code == 0
        assert out.strip() == "c0^2 + 2*c1"

    def test_eliminate(self, capsys):
        code, out, _ = run(capsys, ["functional", "eliminate", "r=1", "t=1"])
        assert code == 0
        assert out.strip() == "-1/2*c0^2"

    def test_reduce(self, capsys):
        code, out, _ = run(capsys, ["functional", "reduce", "r=1", "n=0", "m=0"])
        assert code == 0
        assert out.strip() == "0"

    def test_check_passes(self, capsys):
        code, out, err = run(capsys, ["functional", "check", "r=x", "--budget", "6"])
        assert code == 0
        verdicts = [json.loads(line) for line in out.strip().splitlines()]
        assert all(set(v) == {"member_Mr", "a"} for v in verdicts)
        assert any(v["member_Mr"] for v in verdicts)
        assert any(not v["member_Mr"] for v in verdicts)

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, ["functional", "eliminate", "r=1"])
        assert code == 2

    def test_bad_key_value(self, capsys):
        code, _, _ = run(capsys, ["functional", "system", "r"])
        assert code == 2


class TestAct:
    def test_empty_word_echoes_input(self, tmp_path, capsys):
        op = {"a": "1/2", "r": "2*x - 3"}
        word = write(tmp_path, "w.json", [])
        opfile = write(tmp_path, "op.json", op)
        code, out, _ = run(capsys, ["act", "--word", word, "--op", opfile])
        assert code == 0
        assert json.loads(out) == op

    def test_word_on_single_operator(self, tmp_path, capsys):
        word = write(tmp_path, "w.json", [{"type": "GA", "nu": "2"}])
        opfile = write(tmp_path, "op.json", {"a": "2", "r": "x"})
        code, out, _ = run(capsys, ["act", "--word", word, "--op", opfile])
        assert code == 0
        assert json.loads(out) == {"a": "0", "r": "x + 2"}

    def test_word_on_tuple(self, tmp_path, capsys):
        word = write(tmp_path, "w.json", [{"type": "HB", "b": "0", "s": "x"}])
        ops = [{"a": "0", "r": "1"}, {"a": "0", "r": "x"}]
        opfile = write(tmp_path, "ops.json", ops)
        code, out, _ = run(capsys, ["act", "--word", word, "--op", opfile])
        assert code == 0
        assert json.loads(out) == [{"a": "0", "r": "x + 1"}, {"a": "0", "r": "x"}]

    def test_invalid_generator(self, tmp_path, capsys):
        word = write(tmp_path, "w.json", [{"type": "HB", "b": "0", "s": "x + 1"}])
        opfile = write(tmp_path, "op.json", {"a": "0", "r": "1"})
        code, _, _ = run(capsys, ["act", "--word", word, "--op", opfile])
        assert code == 2


class TestTransit:
    def test_single(self, tmp_path, capsys):
        src = write(tmp_path, "src.json", {"a": "0", "r": "1"})
        dst = write(tmp_path, "dst.json", {"a": "1", "r": "x + 1"})
        code, out, _ = run(capsys, ["transit", "--src", src, "--dst", dst])
        assert code == 0
        report = json.loads(out)
        assert report["verified"] is True
        assert report["word_length"] <= 3

    def test_word_reapplies(self, tmp_path, capsys):
        from rbx.actions import apply_word, word_from_json

        src_op = AnalyticOp(1, Poly.x())
        dst_op = AnalyticOp(-2, Poly((1, 0, 3)))
        src = write(tmp_path, "src.json", src_op.to_json())
        dst = write(tmp_path, "dst.json", dst_op.to_json())
        code, out, _ = run(capsys, ["transit", "--src", src, "--dst", dst])
        assert code == 0
        word = word_from_json(json.loads(out)["word"])
        assert apply_word(word, src_op) == dst_op

    def test_independent_tuples(self, tmp_path, capsys):
        src = write(tmp_path, "src.json", [{"a": "0", "r": "1"}, {"a": "0", "r": "x"}])
        dst = write(
            tmp_path, "dst.json", [{"a": "0", "r": "x + 1"}, {"a": "0", "r": "x - 1"}]
        )
        code, out, _ = run(
            capsys, ["transit", "--src", src, "--dst", dst, "--mode", "independent"]
        )
        assert code == 0
        assert json.loads(out)["verified"] is True

    def test_distinct_tuples(self, tmp_path, capsys):
        src = write(tmp_path, "src.json", [{"a": "0", "r": "1"}, {"a": "0", "r": "2"}])
        dst = write(tmp_path, "dst.json", [{"a": "0", "r": "x"}, {"a": "0", "r": "x^2"}])
        code, out, _ = run(
            capsys, ["transit", "--src", src, "--dst", dst, "--mode", "distinct"]
        )
        assert code == 0
        assert json.loads(out)["verified"] is True

    def test_dependent_tuple_in_independent_mode(self, tmp_path, capsys):
        src = write(tmp_path, "src.json", [{"a": "0", "r": "x"}, {"a": "0", "r": "2*x"}])
        dst = write(tmp_path, "dst.json", [{"a": "0", "r": "1"}, {"a": "0", "r": "x"}])
        code, _, err = run(
            capsys, ["transit", "--src", src, "--dst", dst, "--mode", "independent"]
        )
        assert code == 2


class TestOrbit:
    def test_witness(self, tmp_path, capsys):
        op1 = write(tmp_path, "a.json", {"a": "0", "r": "x"})
        op2 = write(tmp_path, "b.json", {"a": "1", "r": "2*x - 2"})
        code, out, _ = run(capsys, ["orbit", "--aut", op1, op2])
        assert code == 0
        report = json.loads(out)
        assert report["in_orbit"] is True and report["word"]

    def test_degree_mismatch(self, tmp_path, capsys):
        op1 = write(tmp_path, "a.json", {"a": "0", "r": "x"})
        op2 = write(tmp_path, "b.json", {"a": "0", "r": "x^2"})
        code, out, _ = run(capsys, ["orbit", "--aut", op1, op2])
        assert code == 1
        assert json.loads(out) == {"in_orbit": False, "word": None}


class TestStdin:
    def test_dash_reads_stdin(self, tmp_path, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"a": "0", "r": "1"})))
        code, out, _ = run(capsys, ["verify", "-", "--degree", "2"])
        assert code == 0
        assert json.loads(out)["holds"] is True


class TestSelftestCommand:
    def test_reports_all_criteria(self, capsys):
        code, out, _ = run(capsys, ["selftest", "--seed", "5"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len([l for l in lines if l.startswith("criterion")]) == 11
        assert lines[-1].startswith("selftest: 11/11")
