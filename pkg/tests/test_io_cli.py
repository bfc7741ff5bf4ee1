import json

import numpy as np
import pytest

import tfaug as T
from tfaug.cli import main
from tfaug.io import (
    read_signals_binary,
    read_signals_csv,
    write_signals_binary,
    write_signals_csv,
)

from conftest import rand_dataset


class TestSignalFiles:
    def test_binary_round_trip_exact(self, rng, tmp_path):
        ds = rand_dataset(rng, 4, 16)
        path = tmp_path / "sig.bin"
        write_signals_binary(path, ds)
        back = read_signals_binary(path)
        assert np.array_equal(back.as_matrix(), ds.as_matrix())

    def test_csv_round_trip_exact(self, rng, tmp_path):
        ds = rand_dataset(rng, 3, 8)
        path = tmp_path / "sig.csv"
        write_signals_csv(path, ds)
        back = read_signals_csv(path)
        assert np.array_equal(back.as_matrix(), ds.as_matrix())

    def test_cross_format_equal(self, rng, tmp_path):
        ds = rand_dataset(rng, 3, 8)
        write_signals_binary(tmp_path / "a.bin", ds)
        write_signals_csv(tmp_path / "a.csv", ds)
        a = read_signals_binary(tmp_path / "a.bin").as_matrix()
        b = read_signals_csv(tmp_path / "a.csv").as_matrix()
        assert np.array_equal(a, b)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "empty.bin"
        path.write_bytes(b"")
        with pytest.raises(ValueError):
            read_signals_binary(path)

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "bad.bin"
        path.write_bytes(b"NOPE" + bytes(16))
        with pytest.raises(ValueError):
            read_signals_binary(path)

    def test_truncated_rejected(self, rng, tmp_path):
        ds = rand_dataset(rng, 2, 8)
        path = tmp_path / "sig.bin"
        write_signals_binary(path, ds)
        path.write_bytes(path.read_bytes()[:-8])
        with pytest.raises(ValueError):
            read_signals_binary(path)

    def test_csv_missing_header_rejected(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("1.0,0.0\n")
        with pytest.raises(ValueError):
            read_signals_csv(path)


class TestDomainJson:
    def test_rect_round_trip(self):
        dom = T.make_rect_domain(16, 2.0, 1.5, center=(0.5, 0.0))
        back = T.domain_from_json(T.domain_to_json(dom))
        assert np.array_equal(back.mask, dom.mask)

    def test_full_round_trip(self):
        dom = T.full_domain(8)
        back = T.domain_from_json(T.domain_to_json(dom))
        assert np.array_equal(back.mask, dom.mask)

    def test_cells_round_trip(self):
        dom = T.make_cells_domain(8, [(0, 0), (3, 4)])
        back = T.domain_from_json(T.domain_to_json(dom))
        assert np.array_equal(back.mask, dom.mask)


class TestCli:
    def test_gen_metrics_pipeline(self, tmp_path, capsys):
        sig = str(tmp_path / "s.bin")
        assert main(["gen", "--family", "chirps", "--n", "10", "--d", "64",
                     "--seed", "3", "--out", sig]) == 0
        capsys.readouterr()
        assert main(["metrics", "--in", sig, "--rect", "2", "2"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["n_signals"] == 10
        assert out["H_augmented"] >= out["H"] - 1e-9 or out["alc"] >= 0

    def test_augment_and_convert(self, tmp_path, capsys):
        sig = str(tmp_path / "s.bin")
        main(["gen", "--family", "gaussian_combos", "--n", "5", "--d", "36",
              "--seed", "0", "--out", sig])
        aug = str(tmp_path / "aug.csv")
        assert main(["augment", "--in", sig, "--rect", "1.2", "1.2", "--out", aug]) == 0
        conv = str(tmp_path / "s.csv")
        assert main(["convert", "--in", sig, "--out", conv]) == 0
        a = T.read_signals(sig).as_matrix()
        b = T.read_signals(conv).as_matrix()
        assert np.array_equal(a, b)

    def test_bounds_passes(self, tmp_path, capsys):
        sig = str(tmp_path / "s.bin")
        main(["gen", "--family", "chirps", "--n", "8", "--d", "64",
              "--seed", "1", "--out", sig])
        capsys.readouterr()
        assert main(["bounds", "--in", sig, "--rect", "2.5", "2.5"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["sandwich"]["pass"] is True

    def test_experiment_runs(self, tmp_path, capsys):
        out_dir = str(tmp_path / "res")
        code = main(["experiment", "--experiment", "hermite_mix", "--d", "64",
                     "--out", out_dir, "--no-svg"])
        assert code == 0
        csv = (tmp_path / "res" / "hermite_mix.csv").read_text()
        assert csv.startswith("#")
        assert "config_hash" in csv
        report = json.loads((tmp_path / "res" / "hermite_mix.report.json").read_text())
        assert report["config"]["experiment"] == "hermite_mix"

    def test_experiment_svg_emitted(self, tmp_path):
        out_dir = tmp_path / "res"
        main(["experiment", "--experiment", "hermite_mix", "--d", "64",
              "--out", str(out_dir), "--svg"])
        assert (out_dir / "hermite_mix.svg").read_text().startswith("<svg")

    def test_config_file_with_override(self, tmp_path):
        conf = tmp_path / "conf.json"
        conf.write_text(json.dumps({"experiment": "hermite_mix", "d": 36, "svg": False}))
        out_dir = tmp_path / "res"
        assert main(["experiment", "--config", str(conf), "--d", "64",
                     "--out", str(out_dir)]) == 0
        text = (out_dir / "hermite_mix.csv").read_text()
        assert "# d=64" in text  # CLI flag overrides the config value

    def test_missing_file_exit_2(self, tmp_path, capsys):
        assert main(["metrics", "--in", str(tmp_path / "nope.bin")]) == 2

    def test_unknown_experiment_exit_2(self, capsys):
        assert main(["experiment", "--experiment", "nope"]) == 2

    def test_usage_error_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--family", "chirps"])  # missing required args
        assert exc.value.code == 2


class TestDeterminism:
    def test_experiment_csv_byte_identical(self, tmp_path):
        dirs = [str(tmp_path / "a"), str(tmp_path / "b")]
        for out in dirs:
            assert main(["experiment", "--experiment", "bounds_suite", "--d", "16",
                         "--trials", "10", "--seed", "5", "--out", out,
                         "--no-svg"]) == 0
        a = (tmp_path / "a" / "bounds_suite.csv").read_bytes()
        b = (tmp_path / "b" / "bounds_suite.csv").read_bytes()
        assert a == b

    def test_threads_do_not_change_output(self, tmp_path):
        base = str(tmp_path / "t1")
        multi = str(tmp_path / "t4")
        for out, threads in ((base, "1"), (multi, "4")):
            main(["experiment", "--experiment", "gauss_alc", "--d", "100",
                  "--trials", "6", "--N", "10", "--seed", "2",
                  "--threads", threads, "--out", out, "--no-svg"])
        a = (tmp_path / "t1" / "gauss_alc.csv").read_bytes()
        b = (tmp_path / "t4" / "gauss_alc.csv").read_bytes()
        assert a == b
