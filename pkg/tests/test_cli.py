import csv
import io
import json

from symtotient.cli import main, parse_indices, parse_range


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_comma_list(self):
        assert parse_indices("1,2", 4) == frozenset({1, 2})

    def test_range_to_k(self):
        assert parse_indices("1..k", 4) == frozenset({1, 2, 3, 4})
        assert parse_indices("2..3", 4) == frozenset({2, 3})

    def test_ranges(self):
        assert list(parse_range("3..5")) == [3, 4, 5]
        assert list(parse_range("7")) == [7]
        assert list(parse_range("5..3")) == []


class TestTotientCommand:
    def test_both_agree(self, capsys):
        code, out, _ = run_cli(
            capsys, "totient", "--n", "9", "--k", "2", "--J", "1,2",
            "--mode", "individual", "--method", "both",
        )
        assert code == 0
        assert "value=18" in out and "method=both" in out

    def test_convention_n1(self, capsys):
        code, out, _ = run_cli(capsys, "totient", "--n", "1", "--k", "3", "--J", "2")
        assert code == 0
        assert "value=1" in out

    def test_budget_refusal_exits_3(self, capsys):
        code, _, err = run_cli(
            capsys, "totient", "--n", "10000019", "--k", "2", "--J", "1",
            "--method", "brute",
        )
        assert code == 3
        assert "budget" in err

    def test_malformed_J_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "totient", "--n", "9", "--k", "2", "--J", "1,x")
        assert code == 2
        assert "error" in err

    def test_J_out_of_range_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "totient", "--n", "9", "--k", "2", "--J", "5")
        assert code == 2


class TestZerosCommand:
    def test_recurrence_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "zeros", "--p", "3", "--k", "3", "--J", "2,3", "--method", "both"
        )
        assert code == 0
        assert "value=7" in out

    def test_no_closed_form_message(self, capsys):
        code, _, err = run_cli(
            capsys, "zeros", "--p", "7", "--k", "5", "--J", "3", "--method", "closed"
        )
        assert code == 2
        assert "no closed form" in err

    def test_brute_fallback_for_unclosed(self, capsys):
        code, out, _ = run_cli(
            capsys, "zeros", "--p", "7", "--k", "5", "--J", "3", "--method", "brute"
        )
        assert code == 0
        assert "method=brute-force" in out


class TestCongruenceCommand:
    def test_hand_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "congruence", "--n", "3", "--b", "1", "--coeffs", "1,1,1,1",
            "--J", "3,4", "--method", "both",
        )
        assert code == 0
        assert "value=5" in out

    def test_closed_requires_unit_rhs(self, capsys):
        code, _, err = run_cli(
            capsys, "congruence", "--n", "9", "--b", "3", "--coeffs", "1,1",
            "--J", "2", "--method", "closed",
        )
        assert code == 2
        assert "gcd(b, n)" in err


class TestMenonCommand:
    def test_classical(self, capsys):
        code, out, _ = run_cli(
            capsys, "menon", "--n", "6", "--k", "1", "--J", "1", "--f", "id"
        )
        assert code == 0
        assert "lhs=8" in out and "rhs=8" in out


class TestRamanujanCommand:
    def test_both(self, capsys):
        code, out, _ = run_cli(
            capsys, "ramanujan", "--m", "1", "--n", "9", "--k", "2", "--J", "2",
            "--method", "both",
        )
        assert code == 0
        assert "value=0" in out


class TestTableCommand:
    def test_csv_shape_and_header(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--quantity", "N_e2", "--p-range", "3..13",
            "--k-range", "2..5", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["quantity", "param:k", "param:p", "value", "method"]
        # 4 arities x the 5 primes in [3, 13]
        assert len(rows) - 1 == 20
        assert rows[1] == ["N_e2", "2", "3", "5", "closed-form"]

    def test_jsonl(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--quantity", "phi_123", "--n-range", "1..10",
            "--format", "jsonl",
        )
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 10
        assert lines[4] == {
            "quantity": "phi_123",
            "params": {"n": 5},
            "value": "40",
            "method": "closed-form",
        }

    def test_single_point_jordan(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--quantity", "jordan", "--k-range", "2..2",
            "--n-range", "6..6",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 2
        assert rows[1][-2] == "24"

    def test_empty_range_header_only(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--quantity", "euler_phi", "--n-range", "5..3"
        )
        assert code == 0
        assert out.splitlines() == ["quantity,param:n,value,method"]

    def test_missing_range_flag(self, capsys):
        code, _, err = run_cli(capsys, "table", "--quantity", "N_e2", "--k-range", "2..3")
        assert code == 2
        assert "--p-range" in err

    def test_deterministic_output(self, capsys):
        args = ("table", "--quantity", "toth_phi_1k", "--k-range", "2..3", "--n-range", "1..20")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestVerifyCommand:
    def test_menon_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "menon")
        assert code == 0
        assert "menon:" in out and "failed=0" in out

    def test_tiny_budget_skips_but_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "congruence", "--budget", "100")
        assert code == 0
        assert "skipped" in out

    def test_tiny_budget_fails_strict(self, capsys):
        code, _, _ = run_cli(
            capsys, "verify", "--suite", "congruence", "--budget", "100", "--strict"
        )
        assert code == 2
