"""Command-line surface: argument handling, files, and exit codes."""

import io

import pytest
from rave.cli import main
from rave.wire import parse_stream


def gen_file(tmp_path, name="stream.rw", spec="v1.0", total=500, ratio=400_000):
    path = tmp_path / name
    rc = main(
        [
            "gen",
            "--total", str(total),
            "--vec-per-million", str(ratio),
            "--seed", "1",
            "--spec", spec,
            "--out", str(path),
        ]
    )
    assert rc == 0
    return path


def test_gen_writes_parseable_stream(tmp_path):
    path = gen_file(tmp_path, total=100, ratio=250_000)
    text = path.read_text()
    assert text.startswith("# rave-wire v1\n")
    recs = list(parse_stream(io.BytesIO(text.encode())))
    assert len(recs) == 101


def test_gen_to_stdout(capsys):
    rc = main(["gen", "--total", "5", "--vec-per-million", "0", "--out", "-"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("# rave-wire v1\n")
    assert len(out.splitlines()) == 7


@pytest.mark.parametrize("spec", ["v0.7.1", "v1.0"])
def test_gen_analyze_round_trip(tmp_path, capsys, spec):
    path = gen_file(tmp_path, spec=spec, total=1000, ratio=300_000)
    rc = main(["analyze", "--spec", spec, "--input", str(path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "Whole stream:" in out
    assert "tot_instr: 1001" in out
    assert "SEW 64 vector_instr: 300 (29.97 %)" in out


def test_analyze_output_files(tmp_path):
    stream = gen_file(tmp_path, total=200, ratio=500_000)
    report = tmp_path / "report.txt"
    log = tmp_path / "instr.log"
    prefix = tmp_path / "trace"
    rc = main(
        [
            "analyze",
            "--spec", "v1.0",
            "--input", str(stream),
            "--report", str(report),
            "--log", str(log),
            "--prv", str(prefix),
            "--region-index-base", "1",
        ]
    )
    assert rc == 0
    assert "tot_instr: 201" in report.read_text()
    assert "\x1b" not in report.read_text()  # file output is never colored
    assert len(log.read_text().splitlines()) == 100
    for ext in (".prv", ".pcf", ".row"):
        assert prefix.with_suffix(ext).stat().st_size > 0
    assert prefix.with_suffix(".prv").read_text().startswith("#Paraver")


def test_analyze_split_events_flag(tmp_path):
    stream = gen_file(tmp_path, total=50, ratio=200_000)
    combined = tmp_path / "c"
    split = tmp_path / "s"
    for prefix, flag in ((combined, []), (split, ["--split-events"])):
        rc = main(
            ["analyze", "--spec", "v1.0", "--input", str(stream),
             "--prv", str(prefix), "--report", str(tmp_path / "r.txt"), *flag]
        )
        assert rc == 0
    c_lines = combined.with_suffix(".prv").read_text().splitlines()
    s_lines = split.with_suffix(".prv").read_text().splitlines()
    assert len(s_lines) > len(c_lines)


def test_analyze_reads_stdin(tmp_path, capsys, monkeypatch):
    data = gen_file(tmp_path, total=40, ratio=0).read_bytes()

    class FakeStdin:
        buffer = io.BytesIO(data)

    monkeypatch.setattr("sys.stdin", FakeStdin())
    rc = main(["analyze", "--spec", "v1.0", "--input", "-"])
    assert rc == 0
    assert "tot_instr: 41" in capsys.readouterr().out


def test_color_env_toggles_ansi(tmp_path, capsys, monkeypatch):
    stream = gen_file(tmp_path, total=10, ratio=0)
    monkeypatch.setenv("RAVE_COLOR", "1")
    assert main(["analyze", "--spec", "v1.0", "--input", str(stream)]) == 0
    assert "\x1b[1m" in capsys.readouterr().out

    monkeypatch.setenv("RAVE_COLOR", "0")
    assert main(["analyze", "--spec", "v1.0", "--input", str(stream)]) == 0
    assert "\x1b" not in capsys.readouterr().out


def test_malformed_input_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.rw"
    bad.write_text("# rave-wire v1\nI 100 02430157\nnot a record\n")
    rc = main(["analyze", "--spec", "v1.0", "--input", str(bad)])
    assert rc == 1
    err = capsys.readouterr().err
    assert err.startswith("rave: ")
    assert "line 3" in err


def test_version_mismatch_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.rw"
    bad.write_text("# rave-wire v2\n")
    assert main(["analyze", "--spec", "v1.0", "--input", str(bad)]) == 1
    assert "v2" in capsys.readouterr().err


def test_strict_vtype_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.rw"
    bad.write_text("# rave-wire v1\nI 100 02430157\n")
    rc = main(["analyze", "--spec", "v1.0", "--input", str(bad)])
    assert rc == 1
    assert "record 1" in capsys.readouterr().err


def test_permissive_rescues_both_errors(tmp_path, capsys):
    bad = tmp_path / "bad.rw"
    bad.write_text("# rave-wire v1\nI 100 02430157\nnot a record\n")
    rc = main(["analyze", "--spec", "v1.0", "--input", str(bad), "--permissive"])
    assert rc == 0
    assert "tot_instr: 1" in capsys.readouterr().out


def test_missing_input_file_exits_1(tmp_path, capsys):
    rc = main(["analyze", "--spec", "v1.0", "--input", str(tmp_path / "nope")])
    assert rc == 1
    assert "rave: " in capsys.readouterr().err


def test_bad_vlen_exits_1(tmp_path, capsys):
    stream = gen_file(tmp_path, total=1, ratio=0)
    rc = main(["analyze", "--spec", "v1.0", "--vlen", "100", "--input", str(stream)])
    assert rc == 1
    assert "power of two" in capsys.readouterr().err


def test_bad_gen_ratio_exits_1(tmp_path, capsys):
    rc = main(
        ["gen", "--total", "10", "--vec-per-million", "2000000",
         "--out", str(tmp_path / "x")]
    )
    assert rc == 1
    assert "vec_per_million" in capsys.readouterr().err


def test_sigint_exits_130(tmp_path, monkeypatch):
    stream = gen_file(tmp_path, total=1, ratio=0)

    def boom(*a, **kw):
        raise KeyboardInterrupt

    monkeypatch.setattr("rave.cli.run_stream", boom)
    assert main(["analyze", "--spec", "v1.0", "--input", str(stream)]) == 130


def test_unknown_spec_is_a_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc_info:
        main(["analyze", "--spec", "v2.0", "--input", "x"])
    assert exc_info.value.code == 2


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == 2
