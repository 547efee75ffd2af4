from lexdiv import cli
from lexdiv.store import Database


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestIngest:
    def test_report_printed(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "ingest", str(f1_data_dir))
        assert code == 0
        assert "senses=8" in out
        assert "rejected 0" in out

    def test_snapshot_written(self, f1_data_dir, tmp_path, capsys):
        snapshot = tmp_path / "cache.bin"
        code, _out, _err = run(capsys, "ingest", str(f1_data_dir), "--snapshot", str(snapshot))
        assert code == 0
        restored = Database.load_snapshot(snapshot)
        assert len(restored.senses) == 8


class TestValidate:
    def test_clean_store(self, f1_f2_data_dir, capsys):
        code, out, _err = run(capsys, "validate", str(f1_f2_data_dir))
        assert code == 0
        assert out.startswith("ok:")

    def test_violations_reported(self, f1_data_dir, capsys):
        with open(f1_data_dir / "concepts.tsv", "a", encoding="utf-8") as fh:
            fh.write("orphan\tnoun\tunattested\n")
        code, out, _err = run(capsys, "validate", str(f1_data_dir))
        assert code == 1
        assert "concept-attested" in out


class TestAnalyze:
    def test_similarity(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "analyze", "similarity",
                              "--data-dir", str(f1_data_dir), "--min-overlap", "1")
        assert code == 0
        assert "eng\tita\t1.0\t2\t2" in out

    def test_clusters_single_concept(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "analyze", "clusters",
                              "--data-dir", str(f1_data_dir), "--concept", "fish")
        assert code == 0
        assert out.count("fish\t") == 4

    def test_diversity(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "analyze", "diversity",
                              "--data-dir", str(f1_data_dir), "--concept", "fish")
        assert code == 0
        assert "fish\t0.3333333333333333\t4\t2" in out


class TestLayout:
    def test_positions_tsv(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "layout", "--data-dir", str(f1_data_dir),
                              "--min-overlap", "1", "--iterations", "30", "--seed", "3")
        assert code == 0
        lines = [l for l in out.splitlines() if l]
        # swa and kan share no lexicalised concept with anyone: no record
        assert [l.split("\t")[0] for l in lines] == ["eng", "fin", "hun", "ita"]
        assert all(len(l.split("\t")) == 3 for l in lines)

    def test_deterministic(self, f1_data_dir, capsys):
        _code, first, _ = run(capsys, "layout", "--data-dir", str(f1_data_dir),
                              "--min-overlap", "1", "--iterations", "20", "--seed", "5")
        _code, second, _ = run(capsys, "layout", "--data-dir", str(f1_data_dir),
                               "--min-overlap", "1", "--iterations", "20", "--seed", "5")
        assert first == second


class TestExport:
    def test_raw_gaps(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "export", "raw", "gaps", "--data-dir", str(f1_data_dir))
        assert code == 0
        assert len([l for l in out.splitlines() if l]) == 2

    def test_lexicon_to_file(self, f1_data_dir, tmp_path, capsys):
        target = tmp_path / "eng.xml"
        code, _out, _err = run(capsys, "export", "lexicon", "eng", "--format", "lmf-xml",
                               "--data-dir", str(f1_data_dir), "--out", str(target))
        assert code == 0
        assert target.read_text(encoding="utf-8").startswith("<?xml")

    def test_lexicon_set(self, f1_data_dir, capsys):
        code, out, _err = run(capsys, "export", "lexicon-set", "eng", "ita",
                              "--data-dir", str(f1_data_dir))
        assert code == 0
        assert out.splitlines()[0] == "concept_id\teng\tita"

    def test_unknown_language_exit_code(self, f1_data_dir, capsys):
        code, _out, err = run(capsys, "export", "lexicon", "xxx",
                              "--data-dir", str(f1_data_dir))
        assert code == 2
        assert "unknown-language" in err
