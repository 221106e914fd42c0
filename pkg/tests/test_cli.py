"""Command line interface: argument handling, outputs, exit codes."""

import json

import numpy as np
import pytest

from gkern import load_gram_csv, load_tu_dataset
from gkern.cli import load_data_spec, main


DATA = "labeled:count=6,mean=8,edge-prob=0.2,pv=0.5"


class TestDataSpecs:
    def test_synthetic_specs(self):
        ds = load_data_spec(DATA, seed=3)
        assert len(ds) == 6
        again = load_data_spec(DATA, seed=3)
        assert [g.n for g in ds] == [g.n for g in again]
        alpha = load_data_spec("alphabet:count=4,mean=10,alphabet=3", seed=1)
        assert len(alpha) == 4

    def test_bad_specs_are_usage_errors(self):
        from gkern import ParameterError

        for spec in (
            "labeled:mean=8",            # missing count
            "labeled:count=4,shape=9",   # unknown parameter
            "labeled:count",             # not key=value
            "mystery:count=4",           # unknown kind
            "tu:only-a-name",            # malformed tu spec
        ):
            with pytest.raises(ParameterError):
                load_data_spec(spec, seed=0)


class TestCompute:
    def test_both_regimes_agree_and_write_files(self, tmp_path, capsys):
        out = str(tmp_path / "walk")
        code = main(
            [
                "compute",
                "--data", DATA,
                "--kernel", "walk",
                "--length", "3",
                "--out", out,
            ]
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "max relative discrepancy between schemes: 0.000e+00" in stdout
        implicit = load_gram_csv(f"{out}.implicit.csv")
        explicit = load_gram_csv(f"{out}.explicit.csv")
        assert (implicit == explicit).all()
        assert implicit.shape == (6, 6)
        timing = json.loads(open(f"{out}.implicit.timing.json").read())
        assert timing["scheme"] == "implicit"
        assert float(open(f"{out}.discrepancy.txt").read()) == 0.0

    def test_single_regime_single_file(self, tmp_path):
        out = str(tmp_path / "one")
        code = main(
            [
                "compute",
                "--data", DATA,
                "--kernel", "sp",
                "--regime", "implicit",
                "--out", out,
            ]
        )
        assert code == 0
        gram = load_gram_csv(f"{out}.csv")
        assert gram.shape == (6, 6)
        assert (gram == gram.T).all()

    def test_svm_precomputed_format(self, tmp_path):
        out = str(tmp_path / "svm")
        code = main(
            [
                "compute",
                "--data", DATA,
                "--kernel", "graphlet",
                "--regime", "explicit",
                "--format", "svm-precomputed",
                "--out", out,
            ]
        )
        assert code == 0
        lines = open(f"{out}.svm").read().splitlines()
        assert len(lines) == 6
        assert lines[0].split()[1] == "0:1"

    def test_normalize_flag(self, tmp_path):
        out = str(tmp_path / "norm")
        code = main(
            [
                "compute",
                "--data", DATA,
                "--kernel", "walk",
                "--regime", "implicit",
                "--length", "2",
                "--normalize",
                "--out", out,
            ]
        )
        assert code == 0
        gram = load_gram_csv(f"{out}.csv")
        diag = np.diag(gram)
        # sqrt(x) * sqrt(x) may be one ulp off x, so the diagonal is 1
        # only to float precision
        assert (np.isclose(diag, 1.0, rtol=1e-12) | (diag == 0.0)).all()

    def test_weighted_kernels_both_regimes(self, capsys):
        for kernel in ("graph-invariant", "graphhopper"):
            code = main(
                [
                    "compute",
                    "--data", "labeled:count=4,mean=6,edge-prob=0.3",
                    "--kernel", kernel,
                ]
            )
            assert code == 0
            assert "0.000e+00" in capsys.readouterr().out

    def test_bridge_length_kernel_is_implicit_only(self, capsys):
        code = main(
            [
                "compute",
                "--data", DATA,
                "--kernel", "sp",
                "--length-kernel", "brownian-bridge",
            ]
        )
        assert code == 2
        assert "implicit-only" in capsys.readouterr().err

    def test_subgraph_matching_has_no_explicit_regime(self, capsys):
        code = main(
            [
                "compute",
                "--data", DATA,
                "--kernel", "subgraph-matching",
                "--regime", "explicit",
            ]
        )
        assert code == 2
        assert "graphlet" in capsys.readouterr().err

    def test_subgraph_matching_implicit_works(self, capsys):
        code = main(
            [
                "compute",
                "--data", "labeled:count=3,mean=5,edge-prob=0.3",
                "--kernel", "subgraph-matching",
                "--regime", "implicit",
                "--max-size", "2",
            ]
        )
        assert code == 0


class TestStats:
    def test_summary_line(self, capsys):
        code = main(["stats", "--data", DATA])
        assert code == 0
        line = capsys.readouterr().out.strip()
        assert "6 graphs" in line
        assert "vertex labels +" in line
        assert "edge labels +" in line
        assert "attributes -" in line

    def test_missing_dataset_is_a_data_error(self, capsys):
        code = main(["stats", "--data", "tu:/nonexistent/dir:NOPE"])
        assert code == 3
        assert "error:" in capsys.readouterr().err


class TestGenerate:
    def test_round_trip_through_disk(self, tmp_path, capsys):
        out = str(tmp_path)
        code = main(
            [
                "generate",
                "--generator", "labeled",
                "--count", "5",
                "--mean", "7",
                "--name", "TINY",
                "--out", out,
                "--seed", "11",
            ]
        )
        assert code == 0
        assert "wrote 5 graphs" in capsys.readouterr().out
        ds = load_tu_dataset(out, "TINY")
        assert len(ds) == 5
        # the CLI can consume what it wrote
        assert main(["stats", "--data", f"tu:{out}:TINY"]) == 0

    def test_alphabet_generator(self, tmp_path):
        code = main(
            [
                "generate",
                "--generator", "alphabet",
                "--count", "3",
                "--mean", "6",
                "--edge-prob", "0.4",
                "--alphabet", "3",
                "--name", "ALPHA",
                "--out", str(tmp_path),
            ]
        )
        assert code == 0
        ds = load_tu_dataset(str(tmp_path), "ALPHA")
        assert ds.has_edge_labels


class TestSweep:
    def test_tiny_pv_sweep_writes_csv(self, tmp_path, capsys):
        out = str(tmp_path / "sweep.csv")
        code = main(
            [
                "sweep",
                "--axis", "pv",
                "--sizes", "4,6",
                "--grid", "0.0,0.5",
                "--length", "3",
                "--reps", "1",
                "--quiet",
                "--out", out,
            ]
        )
        assert code == 0
        lines = open(out).read().splitlines()
        header = lines[0].split(",")
        assert header == [
            "axis",
            "value",
            "size",
            "implicit_seconds",
            "explicit_seconds",
            "winner",
            "max_rel_discrepancy",
        ]
        assert len(lines) == 1 + 4  # 2 sizes x 2 grid values
        for line in lines[1:]:
            cells = dict(zip(header, line.split(",")))
            assert cells["axis"] == "pv"
            assert cells["winner"] in ("implicit", "explicit")
            assert float(cells["max_rel_discrepancy"]) < 1e-10

    def test_progress_lines_unless_quiet(self, tmp_path, capsys):
        code = main(
            [
                "sweep",
                "--axis", "length",
                "--sizes", "4",
                "--grid", "1,2",
                "--reps", "1",
            ]
        )
        assert code == 0
        assert capsys.readouterr().out.strip()


class TestConfig:
    def test_config_supplies_defaults_flags_override(self, tmp_path, capsys):
        config = tmp_path / "conf.json"
        config.write_text(
            json.dumps(
                {
                    "data": DATA,
                    "kernel": "walk",
                    "regime": "implicit",
                    "length": 2,
                }
            )
        )
        code = main(["compute", "--config", str(config)])
        assert code == 0
        assert "walk(l=2)" in capsys.readouterr().out
        code = main(["compute", "--config", str(config), "--length", "5"])
        assert code == 0
        assert "walk(l=5)" in capsys.readouterr().out

    def test_missing_and_malformed_config(self, tmp_path, capsys):
        code = main(["compute", "--config", str(tmp_path / "none.json")])
        assert code == 3
        bad = tmp_path / "bad.json"
        bad.write_text("not json")
        assert main(["compute", "--config", str(bad)]) == 3
        listy = tmp_path / "list.json"
        listy.write_text("[1, 2]")
        assert main(["compute", "--config", str(listy)]) == 3

    def test_unknown_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["compute", "--data", DATA, "--kernel", "walk", "--frobnicate"])
        assert info.value.code == 2
