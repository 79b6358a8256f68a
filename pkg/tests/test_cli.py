"""Command-line interface: exit codes, formats, determinism."""

import json

from sepkit.cli import EXIT_BOUND, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestHstar:
    def test_all_methods_agree(self, capsys):
        code, out = run(capsys, "hstar", "--signature", "1,1,1", "--method", "all")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["result"]["agreement"] is True
        assert len(payload["result"]["rows"]) == 3
        assert all(r["coefficients"] == [1, 4, 1] for r in payload["result"]["rows"])

    def test_formula_csv(self, capsys):
        code, out = run(capsys, "hstar", "--signature", "2,2", "--method", "formula", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[1] == "formula,1,5,5,1"

    def test_size_bound_exit(self, capsys):
        code, _ = run(capsys, "hstar", "--signature", "9,9", "--method", "oracle")
        assert code == EXIT_BOUND

    def test_bad_signature_exit(self, capsys):
        code, _ = run(capsys, "hstar", "--signature", "0,1")
        assert code == EXIT_USAGE


class TestRootsAndInterlace:
    def test_roots_json(self, capsys):
        code, out = run(capsys, "roots", "--signature", "2,2")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["certificate"]["on_cl"] is True

    def test_roots_csv_header(self, capsys):
        code, out = run(capsys, "roots", "--signature", "1,4", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "re,im_interval_lo,im_interval_hi"
        assert all(line.startswith("-1/2,") for line in out.splitlines()[1:])

    def test_interlace_known_pair(self, capsys):
        code, out = run(capsys, "interlace", "--a", "1,4", "--b", "1,5")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["certificate"]["interlaces"] is True

    def test_interlace_degree_mismatch(self, capsys):
        code, _ = run(capsys, "interlace", "--a", "1,1", "--b", "1,4")
        assert code == EXIT_VERIFICATION


class TestGb:
    def test_default_checks(self, capsys):
        code, out = run(capsys, "gb", "--signature", "1,1,2")
        payload = json.loads(out)
        assert code == EXIT_OK
        result = payload["result"]
        assert result["reduced"] and result["lead_consistent"] and result["at_most_cubic"]

    def test_k222_scan(self, capsys):
        code, out = run(
            capsys, "gb", "--signature", "2,2,2",
            "--checks", "reduced,lead,k222", "--orders", "5", "--seed", "7",
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["result"]["k222"]["all_orders_obstructed"] is True

    def test_export(self, capsys):
        code, out = run(capsys, "gb", "--signature", "1,1", "--checks", "export")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["basis"] == ["x(1,2)*x(2,1) - z*z"]

    def test_unknown_check(self, capsys):
        code, _ = run(capsys, "gb", "--signature", "1,1", "--checks", "bogus")
        assert code == EXIT_USAGE


class TestRecursionCommand:
    def test_relation_a(self, capsys):
        code, out = run(capsys, "recursion", "--relation", "a", "--n", "3")
        assert code == EXIT_OK
        rows = json.loads(out)["result"]["rows"]
        assert rows[0]["coefficients"] == ["5/8", "3/8"]

    def test_falsified_relation_exits_nonzero(self, capsys):
        code, _ = run(capsys, "recursion", "--relation", "g", "--n", "5")
        assert code == EXIT_VERIFICATION


class TestScan:
    def test_conjecture(self, capsys):
        code, out = run(capsys, "scan", "--kind", "conjecture", "--max-total", "5", "--max-n", "3")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["violations"] == 0

    def test_corollary(self, capsys):
        code, out = run(capsys, "scan", "--kind", "corollary", "--m", "4", "--max-n", "5")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["alpha2_matches"] is True

    def test_k222_kind(self, capsys):
        code, out = run(capsys, "scan", "--kind", "k222", "--orders", "3", "--seed", "1")
        assert code == EXIT_OK


class TestDeterminism:
    def test_byte_stable(self, capsys):
        args = ["gb", "--signature", "2,2,2", "--checks", "reduced,k222", "--orders", "4", "--seed", "11"]
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second

    def test_json_round_trip(self, capsys):
        _, out = run(capsys, "scan", "--kind", "conjecture", "--max-total", "4", "--max-n", "2")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload)) == payload
