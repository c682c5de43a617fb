import json

from cyorbits.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOrbitCommand:
    def test_listed_orbit_text(self, capsys):
        code, out, _ = run(capsys, "orbit", "--d", "5", "--k", "5", "--p", "2", "--seed", "0,1,0,0")
        assert code == 0
        assert out.splitlines() == [
            "(0 0 1 1)", "(0 1 0 0)", "(0 1 0 1)", "(1 0 0 1)", "(1 0 1 1)",
        ]

    def test_complete_orbit_summary(self, capsys):
        code, out, _ = run(capsys, "orbit", "--d", "5", "--k", "5", "--p", "3", "--seed", "0,1,0,0")
        assert code == 0
        assert out.strip() == "Complete (80 vectors)"

    def test_non_prime_rejected(self, capsys):
        code, _, err = run(capsys, "orbit", "--d", "5", "--k", "5", "--p", "4", "--seed", "0,1,0,0")
        assert code == 2
        assert "4 is not prime" in err

    def test_malformed_seed(self, capsys):
        code, _, err = run(capsys, "orbit", "--d", "5", "--k", "5", "--p", "2", "--seed", "0,1,0")
        assert code == 2 and "4 comma-separated integers" in err

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "orbit", "--d", "6", "--k", "6", "--p", "2", "--seed", "0,1,0,0")
        assert code == 2 and "no family" in err

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "orbit", "--d", "9", "--k", "6", "--p", "3", "--seed", "0,0,0,1",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["status"] == "Listed"
        assert doc["vectors"] == [[0, 0, 0, 1], [0, 0, 1, 1], [0, 0, 2, 1]]

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys, "orbit", "--d", "5", "--k", "5", "--p", "2", "--seed", "0,0,0,1",
            "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "d,k,p,seed_tag,status,vector"
        assert len(lines) == 11

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "orbit", "--d", "5", "--k", "5", "--p", "5", "--seed", "0,1,0,0")
        _, second, _ = run(capsys, "orbit", "--d", "5", "--k", "5", "--p", "5", "--seed", "0,1,0,0")
        assert first == second


class TestTablesCommand:
    def test_diff_golden_subset(self, capsys):
        code, out, _ = run(capsys, "tables", "--primes", "2,3", "--diff", "golden")
        assert code == 0
        assert "match" in out

    def test_requires_out_dir_or_diff(self, capsys):
        code, _, err = run(capsys, "tables")
        assert code == 2 and "nothing to do" in err

    def test_bad_prime_list(self, capsys):
        code, _, err = run(capsys, "tables", "--primes", "2,41x", "--diff", "golden")
        assert code == 2
        code, _, err = run(capsys, "tables", "--primes", "2,9", "--diff", "golden")
        assert code == 2 and "9 is not prime" in err

    def test_write_and_rediff(self, capsys, tmp_path):
        out_dir = tmp_path / "tables"
        code, _, _ = run(capsys, "tables", "--primes", "2,3", "--out-dir", str(out_dir))
        assert code == 0
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == ["table2.json", "table3.json", "table4.json"]
        code, _, _ = run(capsys, "tables", "--primes", "2,3", "--diff", str(out_dir))
        assert code == 0

    def test_single_vector_deviation_fails(self, capsys, tmp_path):
        out_dir = tmp_path / "tables"
        run(capsys, "tables", "--primes", "2,3", "--out-dir", str(out_dir))
        doc = json.loads((out_dir / "table3.json").read_text())
        listed = next(r for r in doc["rows"] if r["status"] == "Listed")
        listed["vectors"][0][0] ^= 1
        (out_dir / "table3.json").write_text(json.dumps(doc))
        code, out, _ = run(capsys, "tables", "--primes", "2,3", "--diff", str(out_dir))
        assert code == 1
        assert "vector list differs" in out

    def test_markdown_output(self, capsys, tmp_path):
        out_dir = tmp_path / "md"
        code, _, _ = run(
            capsys, "tables", "--primes", "2", "--out-dir", str(out_dir), "--format", "md"
        )
        assert code == 0
        text = (out_dir / "table2.md").read_text(encoding="utf-8")
        assert "| (5,5) | 2 | Complete |" in text


class TestVerifyCommand:
    def test_clean_run(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        lines = out.splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert "159/159 checks passed" in lines[-1]

    def test_lemma_coverage(self, capsys):
        _, out, _ = run(capsys, "verify")
        lemma_lines = [l for l in out.splitlines() if "power lemma" in l]
        assert len(lemma_lines) == 14 * 9

    def test_fault_injection(self, capsys):
        code, out, _ = run(capsys, "verify", "--inject-fault")
        assert code == 1
        assert any(line.startswith("FAIL") for line in out.splitlines())


class TestScreenCommand:
    def test_torus_candidate_with_witness(self, capsys):
        code, out, _ = run(capsys, "screen", "0,1,0,1", "--search")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "TorusCandidate"
        assert lines[1] == "witness: [M1]"

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "screen", "0,0,0,0")
        assert code == 0 and out.strip() == "Zero"

    def test_neither_skips_search(self, capsys):
        code, out, _ = run(capsys, "screen", "1,1,1,1", "--search")
        assert code == 0
        assert out.splitlines()[0] == "Neither"
        assert "search skipped" in out

    def test_sphere_candidate(self, capsys):
        code, out, _ = run(capsys, "screen", "0,0,0,1", "--search")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "SphereCandidate"
        assert lines[1] == "witness: []"

    def test_miss_reported(self, capsys):
        code, out, _ = run(capsys, "screen", "0,1,0,10", "--search", "--max-len", "1")
        assert code == 0
        assert "no witness found" in out

    def test_malformed_vector(self, capsys):
        code, _, err = run(capsys, "screen", "1;2;3;4")
        assert code == 2


class TestCatalogCommand:
    def test_dump(self, capsys):
        code, out, _ = run(capsys, "catalog", "dump")
        assert code == 0
        doc = json.loads(out)
        assert len(doc) == 14
        assert doc[0] == {"d": 5, "k": 5, "A": "1/5", "B": "2/5", "label": "X(5) ⊂ P4"}
        assert {"d": 16, "k": 8, "A": "1/2", "B": "1/2", "label": "X(2,2,2,2) ⊂ P7"} in doc

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "catalog", "dump")
        _, second, _ = run(capsys, "catalog", "dump")
        assert first == second


class TestPfCommand:
    def test_quintic_check(self, capsys):
        code, out, _ = run(capsys, "pf", "check", "--family", "5,5")
        assert code == 0
        doc = json.loads(out)
        assert [r["loop"] for r in doc] == ["0", "1", "inf"]
        assert all(r["pass"] for r in doc)
        assert doc[2]["charpoly_integer"] == [1, 1, 1, 1, 1]
        assert all(r["max_dev"] <= 1e-4 for r in doc)

    def test_bad_family(self, capsys):
        code, _, err = run(capsys, "pf", "check", "--family", "6,6")
        assert code == 2

    def test_bad_base(self, capsys):
        code, _, err = run(capsys, "pf", "check", "--base", "not-a-number")
        assert code == 2

    def test_bad_radius(self, capsys):
        code, _, err = run(capsys, "pf", "check", "--radius", "-1")
        assert code == 2

    def test_unattainable_tolerance_exits_1(self, capsys):
        code, out, _ = run(capsys, "pf", "check", "--tol", "1e-18")
        assert code == 1
        doc = json.loads(out)
        assert not all(r["pass"] for r in doc)
