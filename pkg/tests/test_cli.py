import pytest

from tetragf2.cli import run
from tetragf2.search import SolutionStore, SolutionRecord, save_store
from tetragf2.gf2 import IDENTITY3

I = "100/010/001"


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEnumerateGl:
    def test_count(self, capsys):
        code, out, _ = invoke(capsys, "enumerate-gl", "--count")
        assert code == 0
        assert out == "168\n"

    def test_listing(self, capsys):
        code, out, _ = invoke(capsys, "enumerate-gl")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 168
        assert lines[0] == "001/010/100"  # smallest invertible packing

    def test_deterministic(self, capsys):
        _, out1, _ = invoke(capsys, "enumerate-gl")
        _, out2, _ = invoke(capsys, "enumerate-gl")
        assert out1 == out2


class TestCheck:
    def test_ds_identity_holds(self, capsys):
        code, out, _ = invoke(capsys, "check", "--ds", I, I, I, I)
        assert code == 0
        assert out == "holds\n"

    def test_ds_false_exits_1(self, capsys):
        code, out, _ = invoke(
            capsys, "check", "--ds", "100/010/011", "100/011/001", "011/001/110", "110/010/001"
        )
        assert code == 1
        assert out == "does not hold\n"

    def test_modified_example(self, capsys):
        code, out, _ = invoke(
            capsys, "check", "--modified",
            "101/100/111", "100/011/001", "100/010/111", "100/010/101", "100/010/111",
        )
        assert code == 0
        assert out == "holds\n"

    def test_malformed_matrix(self, capsys):
        code, _, err = invoke(capsys, "check", "--ds", "12/34", I, I, I)
        assert code == 2
        assert "error" in err


class TestClassify:
    def test_genuine(self, capsys):
        code, out, _ = invoke(capsys, "classify", "011/001/110")
        assert code == 0
        assert out == "genuinely-3d\n"

    def test_not_genuine(self, capsys):
        code, out, _ = invoke(capsys, "classify", I)
        assert code == 1
        assert out == "not-genuinely-3d\n"


class TestQuantize:
    def test_swap_matrix(self, capsys):
        code, out, _ = invoke(capsys, "quantize", "010/100/001")
        assert code == 0
        assert out == "0,1,4,5,2,3,6,7\n"

    def test_singular_rejected(self, capsys):
        code, _, err = invoke(capsys, "quantize", "110/110/001")
        assert code == 2
        assert "singular" in err


class TestVerifyExample:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8])
    def test_all_pass(self, capsys, n):
        code, out, _ = invoke(capsys, "verify-example", str(n))
        assert code == 0
        assert "FAIL" not in out
        assert "all checks passed" in out

    def test_vertex_count_line(self, capsys):
        _, out, _ = invoke(capsys, "verify-example", "1")
        assert "slot3: 14, slot4: 12" in out

    def test_unknown_number(self, capsys):
        code, _, _ = invoke(capsys, "verify-example", "9")
        assert code == 2


class TestSearchModified:
    def test_triple_example5(self, capsys):
        code, out, _ = invoke(
            capsys, "search-modified", "--triple", "101/100/111", "100/011/001", "100/010/111"
        )
        assert code == 0
        assert "1 pair(s)" in out
        assert "100/010/101 100/010/111" in out

    def test_json(self, capsys):
        code, out, _ = invoke(
            capsys, "search-modified", "--json",
            "--triple", "101/100/111", "100/011/001", "100/010/111",
        )
        assert code == 0
        assert '"pair_count": 1' in out


class TestStoreCommands:
    def test_missing_store(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "search-sixtuples", "--store", str(tmp_path / "nope.txt"))
        assert code == 2
        assert "not found" in err

    def test_sixtuples_on_tiny_store(self, capsys, tmp_path):
        store = SolutionStore((SolutionRecord(IDENTITY3, IDENTITY3, IDENTITY3, IDENTITY3),))
        path = tmp_path / "tiny.txt"
        save_store(store, path)
        code, out, _ = invoke(capsys, "search-sixtuples", "--store", str(path))
        assert code == 0
        assert "raw count: 0" in out

    def test_unrestricted_needs_force(self, capsys, tmp_path):
        code, _, err = invoke(
            capsys, "search-base", "--out", str(tmp_path / "s.txt"), "--all-matrices"
        )
        assert code == 2
        assert "--force" in err


class TestUsage:
    def test_unknown_command(self, capsys):
        assert invoke(capsys, "frobnicate")[0] == 2

    def test_no_command(self, capsys):
        assert invoke(capsys)[0] == 2
