"""Tests for sweeps, output formats, regime maps and the command line."""

import csv
import json
import math

import numpy as np
import pytest

from spin_ring.discord import DomainError, StateValidityError, UsageError
from spin_ring.discord.analytic import Regime
from spin_ring.discord.harness import (
    Mode,
    SweepRow,
    SweepSpec,
    emit,
    main,
    region_map,
    run_sweep,
)
from spin_ring.discord.harness._cli import (
    EXIT_INVALID_STATE,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    parse_args,
    read_config,
    spec_from_args,
)
from spin_ring.discord.harness._emit import emit_metadata
from spin_ring.discord.harness._sweep import imap_ordered

LN2 = math.log(2)


def _numbers(row):
    return [v for k, v in row.as_dict().items() if k != "regime"]


##############################################################################
# Specs


class TestSweepSpec:
    @pytest.mark.parametrize(
        ("kwargs", "field"),
        [
            ({"num_spins": ()}, "num_spins"),
            ({"tau_steps": 1}, "tau_steps"),
            ({"jobs": 0}, "jobs"),
            ({"tau_end": math.inf}, "tau_start/tau_end"),
            ({"num_spins": (20,)}, "num_spins"),
            ({"omega_a": 0.9}, "beta/omega"),
            ({"mode": "region-map", "num_spins": (2,)}, "num_spins"),
            ({"mode": "region-map", "u_max": 0.7}, "u_max"),
            ({"mode": "region-map", "gamma_range": (0.1, 12.0)}, "gamma_range"),
            ({"mode": "region-map", "gamma_range": (0.5, 0.2)}, "gamma_range"),
        ],
    )
    def test_invalid(self, kwargs, field):
        base = {"num_spins": (3,), "beta": 1.0, "omega_a": 0.06, "omega_b": 0.03}
        with pytest.raises(UsageError, match=f"^{field}"):
            SweepSpec(**(base | kwargs))

    def test_region_map_range_at_the_limit(self):
        spec = SweepSpec(
            (5,), 1.0, 0.06, 0.03, mode="region-map", u_max=0.1, gamma_range=(0.1, 4.9)
        )
        assert spec.gamma_range == (0.1, 4.9)

    def test_unchecked_accepts_strong_fields(self):
        spec = SweepSpec((5,), 1.0, 0.9, 0.03, checked=False)
        assert not spec.config_for(5, None).checked

    def test_mode_from_string(self):
        assert SweepSpec((3,), 1.0, 0.06, 0.03, mode="analytic").mode is Mode.ANALYTIC

    def test_grid_order(self):
        spec = SweepSpec((3, 4), 1.0, 0.06, 0.03, tau_steps=3, gammas=(0.5, 2.0))
        grid = list(spec.grid())
        assert len(grid) == 12
        assert grid[0] == (3, 0.5, 0.0)
        assert grid[3] == (3, 2.0, 0.0)
        assert grid[-1] == (4, 2.0, math.pi / 2)
        assert grid == sorted(grid)

    def test_gamma_overrides_omega_a(self):
        spec = SweepSpec((3,), 1.0, 0.06, 0.03, gammas=(0.5,))
        assert math.isclose(spec.config_for(3, 0.5).omega_a, 0.015)
        assert spec.config_for(3, None).omega_a == 0.06

    def test_geometry(self):
        plain = SweepSpec((4,), 1.0, 0.06, 0.03)
        assert plain.geometry_for(4) is None

        regular = SweepSpec((4,), 1.0, 0.06, 0.03, include_dipolar=True)
        assert regular.geometry_for(4).num_sites == 3

        seeded = SweepSpec((4,), 1.0, 0.06, 0.03, include_dipolar=True, seed=11)
        a, b = seeded.geometry_for(4), seeded.geometry_for(4)
        assert np.array_equal(a.couplings, b.couplings)
        assert not np.allclose(a.couplings, regular.geometry_for(4).couplings)


##############################################################################
# Sweeps


class TestSweep:
    def test_analytic(self):
        spec = SweepSpec((3,), 1.0, 0.06, 0.03, tau_steps=3, mode=Mode.ANALYTIC)
        rows = list(run_sweep(spec))
        assert [r.tau for r in rows] == [0.0, math.pi / 4, math.pi / 2]
        assert {r.regime for r in rows} == {"IySz"}
        assert all(math.isnan(r.D_numeric) and math.isnan(r.rel_dev) for r in rows)
        assert rows[0].D_ht == 0
        assert math.isclose(rows[-1].D_ht, 0.03**2 / (8 * LN2), rel_tol=1e-12)
        assert math.isclose(rows[-1].C_ht, 0.06**2 / (4 * LN2), rel_tol=1e-12)

    def test_unclassified_points_have_no_closed_form(self):
        spec = SweepSpec(
            (5,),
            1.0,
            0.01,
            0.025,
            1.0,
            0.85,
            0.9,
            2,
            gammas=(0.45,),
            mode=Mode.ANALYTIC,
        )
        rows = list(run_sweep(spec))
        assert [r.regime for r in rows] == ["Unclassified"] * 2
        assert all(math.isnan(r.D_ht) for r in rows)

    def test_compare(self, coarse_search):
        spec = SweepSpec(
            (3,), 1.0, 0.06, 0.03, 1.0, np.pi / 8, np.pi / 2, 4, search=coarse_search
        )
        rows = list(run_sweep(spec))
        assert len(rows) == 4
        for row in rows:
            assert row.regime == "IySz"
            assert math.isclose(row.D_numeric + row.C_numeric, row.I_numeric, abs_tol=1e-9)
            assert math.isclose(abs(row.n_opt_z), 1.0, abs_tol=1e-6)
            assert row.abs_dev == abs(row.D_numeric - row.D_ht)
            assert 0 <= row.rel_dev < 0.05

    def test_parallel_matches_serial(self, coarse_search):
        kwargs = {
            "tau_start": np.pi / 8,
            "tau_steps": 3,
            "gammas": (0.5, 2.0),
            "search": coarse_search,
        }
        serial = list(run_sweep(SweepSpec((3, 4), 1.0, 0.06, 0.03, **kwargs)))
        parallel = list(run_sweep(SweepSpec((3, 4), 1.0, 0.06, 0.03, **kwargs, jobs=2)))
        assert [r.regime for r in serial] == [r.regime for r in parallel]
        np.testing.assert_allclose(
            [_numbers(r) for r in serial], [_numbers(r) for r in parallel], rtol=1e-12
        )

    def test_region_map_spec_is_rejected(self):
        spec = SweepSpec((5,), 1.0, 0.06, 0.03, mode=Mode.REGION_MAP)
        with pytest.raises(DomainError):
            list(run_sweep(spec))

    def test_imap_ordered(self):
        assert list(imap_ordered(abs, [-3, 1, -2], progress=True)) == [3, 1, 2]
        assert list(imap_ordered(abs, [-3, 1, -2], jobs=2)) == [3, 1, 2]
        with pytest.raises(DomainError, match="jobs"):
            list(imap_ordered(abs, [1], jobs=0))


##############################################################################
# Output


class TestEmit:
    @pytest.fixture()
    def rows(self):
        spec = SweepSpec((3,), 1.0, 0.06, 0.03, tau_steps=3, mode=Mode.ANALYTIC)
        return list(run_sweep(spec))

    def test_empty_csv_is_a_header(self, capsys):
        assert emit([], "csv") == 0
        out = capsys.readouterr().out
        assert out == ",".join(SweepRow.field_names()) + "\n"

    def test_csv(self, rows, tmp_path):
        path = tmp_path / "sweep.csv"
        assert emit(rows, "csv", path) == 3
        lines = path.read_text().splitlines()
        assert len(lines) == 4

        with path.open() as f:
            records = list(csv.DictReader(f))
        assert float(records[-1]["D_ht"]) == rows[-1].D_ht
        assert records[0]["D_numeric"] == "nan"
        assert records[0]["N"] == "3"

    def test_json(self, rows, tmp_path):
        path = tmp_path / "sweep.json"
        assert emit(iter(rows), "json", path) == 3
        records = json.loads(path.read_text())
        assert [r["tau"] for r in records] == [r.tau for r in rows]
        assert records[0]["C_numeric"] is None
        assert records[1]["regime"] == "IySz"

    def test_json_is_strict(self, rows, tmp_path):
        def reject(token):
            raise ValueError(token)

        path = tmp_path / "sweep.json"
        emit(rows, "json", path)
        records = json.loads(path.read_text(), parse_constant=reject)
        assert records[-1]["D_ht"] == rows[-1].D_ht
        assert records[-1]["rel_dev"] is None

    def test_failing_rows_leave_no_file(self, tmp_path):
        def rows():
            yield {"a": 1.0}
            raise StateValidityError("bad state")

        path = tmp_path / "out.csv"
        with pytest.raises(StateValidityError):
            emit(rows(), "csv", path, fieldnames=("a",))
        assert not path.exists()

    def test_mappings_with_fieldnames(self, capsys):
        emit([{"a": 1.5, "b": None, "c": "x"}], fieldnames=("c", "a", "b"))
        assert capsys.readouterr().out == "c,a,b\nx,1.5,\n"

    def test_unknown_format(self):
        with pytest.raises(UsageError, match="format"):
            emit([], "parquet")

    def test_unwritable(self, tmp_path):
        with pytest.raises(OSError):
            emit([], "csv", tmp_path / "missing" / "out.csv")

    def test_metadata(self, tmp_path):
        assert emit_metadata({"5": {"gamma": {}}}, "-") is None
        sidecar = emit_metadata({"5": {"gamma": {"ring_dominant": 1.0}}}, tmp_path / "m.csv")
        assert sidecar.name == "m.csv.boundaries.json"
        assert json.loads(sidecar.read_text())["5"]["gamma"]["ring_dominant"] == 1.0


##############################################################################
# Regime maps


class TestRegionMap:
    def test_ring_dominant(self):
        m = region_map(5, (1.5, 3.0), resolution=6)
        assert m.shape == (6, 6)
        assert m.counts()[Regime.IY_SZ] == 36

    def test_centre_dominant(self):
        m = region_map(5, (0.1, 0.4), resolution=8)
        counts = m.counts()
        assert counts[Regime.IY_SZ] == 0
        assert counts[Regime.IZ_SY] > 0
        assert counts[Regime.IZ_SX] > 0
        assert sum(counts.values()) == 64
        # cells are centred inside the ranges
        assert 0.1 < m.gammas.min() < m.gammas.max() < 0.4
        assert 0 < m.taus.min() < m.taus.max() < np.pi / 2

    def test_even_ring_has_no_x_regime(self):
        assert region_map(4, (0.1, 0.4), resolution=8).counts()[Regime.IZ_SX] == 0

    def test_rows(self):
        m = region_map(5, (0.1, 0.4), resolution=3)
        rows = m.rows()
        assert len(rows) == 9
        assert set(rows[0]) == {"N", "gamma", "tau", "regime", "near_boundary", "numeric_axis"}
        assert rows[0]["numeric_axis"] is None
        assert rows[1]["gamma"] == rows[0]["gamma"]

    def test_near_boundary(self):
        m = region_map(5, (0.1, 0.4), resolution=8)
        i = int(np.argmin(np.abs(m.gammas - 1 / np.sqrt(8))))
        assert m.near_boundary(i, 3)
        assert not m.near_boundary(0, 3, margin_cells=0.1)

    def test_too_few_spins(self):
        with pytest.raises(DomainError):
            region_map(2)

    def test_mismatches_need_numeric_axes(self):
        with pytest.raises(DomainError, match="numeric"):
            region_map(5, resolution=3).mismatches()

    def test_parallel_numeric_axes(self, coarse_search):
        kwargs = {"resolution": 4, "numeric": True, "u_max": 0.03, "settings": coarse_search}
        serial = region_map(5, (0.1, 0.4), **kwargs)
        parallel = region_map(5, (0.1, 0.4), **kwargs, jobs=2, progress=True)
        assert parallel.numeric_axes == serial.numeric_axes
        assert len(serial.numeric_axes) == 4
        assert all(len(row) == 4 for row in serial.numeric_axes)

    @pytest.mark.slow()
    def test_numeric_argmin_agrees(self, coarse_search):
        """Away from the boundaries the optimizer picks the tagged axis."""
        m = region_map(5, resolution=40, numeric=True, u_max=0.03, settings=coarse_search)
        assert m.mismatches() == []


##############################################################################
# Command line


class TestCommandLine:
    def test_analytic_csv(self, tmp_path):
        out = tmp_path / "out.csv"
        code = main(["--mode", "analytic", "--tau-steps", "3", "--output", str(out)])
        assert code == EXIT_OK
        assert len(out.read_text().splitlines()) == 4

    @pytest.mark.parametrize(
        "argv",
        [
            ["--tau-steps", "1"],
            ["--no-such-flag"],
            ["--mode", "fast"],
            ["--top-k", "-1"],
            ["--mode", "region-map", "--num-spins", "5", "--gamma", "0.1", "0.2", "0.3"],
        ],
    )
    def test_usage_errors(self, argv):
        assert main(argv) == EXIT_USAGE

    def test_invalid_state(self, tmp_path):
        argv = ["--unchecked", "--num-spins", "5", "--omega-a", "0.9", "--mode", "numeric"]
        argv += ["--tau-steps", "2", "--output", str(tmp_path / "out.csv")]
        assert main(argv) == EXIT_INVALID_STATE
        assert not (tmp_path / "out.csv").exists()

    @pytest.mark.parametrize("fmt", ["csv", "json"])
    def test_output_is_reproducible(self, fmt, tmp_path):
        argv = ["--num-spins", "3", "4", "--gamma", "0.5", "2.0", "--tau-steps", "3"]
        argv += ["--grid-theta", "9", "--grid-phi", "16", "--top-k", "2", "--format", fmt]
        first, second = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        assert main([*argv, "--output", str(first)]) == EXIT_OK
        assert main([*argv, "--output", str(second)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    def test_io_error(self, tmp_path):
        out = tmp_path / "missing" / "out.csv"
        assert main(["--mode", "analytic", "--output", str(out)]) == EXIT_IO

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "# analytic sweep\nnum_spins = 3, 4\nmode = analytic\ntau_steps = 2\n"
            "format = json\nprogress = false\n"
        )
        out = tmp_path / "out.json"
        code = main(["--config", str(cfg), "--tau-steps", "3", "--output", str(out)])
        assert code == EXIT_OK
        records = json.loads(out.read_text())
        assert len(records) == 6
        assert {r["N"] for r in records} == {3, 4}

    def test_config_switches(self, tmp_path):
        parser = build_parser()
        cfg = tmp_path / "a.cfg"
        cfg.write_text("unchecked = true\nwith_dipolar = no\n")
        assert read_config(cfg, parser) == ["--unchecked"]

        cfg.write_text("unchecked = maybe\n")
        with pytest.raises(UsageError, match="boolean"):
            read_config(cfg, parser)

        cfg.write_text("beta 2.0\n")
        with pytest.raises(UsageError, match="cannot parse"):
            read_config(cfg, parser)

    def test_spec_from_args(self):
        args = parse_args(["--num-spins", "3", "5", "--gamma", "0.5", "--grid-theta", "9"])
        spec = spec_from_args(args)
        assert spec.num_spins == (3, 5)
        assert spec.gammas == (0.5,)
        assert spec.search.n_theta == 9
        assert spec.mode is Mode.COMPARE

    def test_region_map(self, tmp_path):
        out = tmp_path / "map.csv"
        argv = ["--mode", "region-map", "--num-spins", "5", "--gamma", "0.1", "0.6"]
        argv += ["--resolution", "4", "--output", str(out)]
        assert main(argv) == EXIT_OK

        with out.open() as f:
            records = list(csv.DictReader(f))
        assert len(records) == 16
        assert {r["numeric_axis"] for r in records} == {""}

        sidecar = json.loads((tmp_path / "map.csv.boundaries.json").read_text())
        assert math.isclose(sidecar["5"]["gamma"]["small_tau_y"], 0.5)

    def test_region_map_range_too_wide(self, tmp_path):
        argv = ["--mode", "region-map", "--num-spins", "5", "--gamma", "0.1", "12"]
        argv += ["--output", str(tmp_path / "map.csv")]
        assert main(argv) == EXIT_USAGE
        assert not (tmp_path / "map.csv").exists()

    def test_region_map_numeric_axes_in_parallel(self, tmp_path):
        out = tmp_path / "map.json"
        argv = ["--mode", "region-map", "--num-spins", "5", "--gamma", "0.1", "0.4"]
        argv += ["--resolution", "3", "--numeric-axes", "--u-max", "0.03"]
        argv += ["--grid-theta", "9", "--grid-phi", "16", "--top-k", "2"]
        argv += ["--jobs", "2", "--format", "json", "--output", str(out)]
        assert main(argv) == EXIT_OK

        records = json.loads(out.read_text())
        assert len(records) == 9
        assert {r["numeric_axis"] for r in records} <= {"x", "y", "z"}
