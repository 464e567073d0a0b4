"""Command-line interface, exercised through subprocesses end to end."""

import subprocess
import sys

import pytest

U = "1100101001111000"
CODEWORD = "110010100111100000001100110000001"
RECEIVED = "110010011100000001100110000001"

# a k=16 cauchy word whose window-12 burst leaves two surviving candidates
AMBIG_Y = "00111110011000001101001011110"
AMBIG_CANDIDATES = {"1100101011100110", "0011111001110000"}

VAND = ["--k", "16", "--w", "4", "--c", "3", "--gen", "vandermonde"]


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "gccodes", *args],
                          capture_output=True, text=True, cwd=cwd)


def write(path, text):
    path.write_text(text + "\n")


def test_encode_corrupt_decode_pipeline(tmp_path):
    write(tmp_path / "msg.bits", U)
    r = run_cli("encode", *VAND, "--in", "msg.bits", "--out", "cw.bits",
                cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    assert (tmp_path / "cw.bits").read_text() == CODEWORD + "\n"

    r = run_cli("corrupt", "--pattern", "7:0,2,3", "--in", "cw.bits",
                "--out", "rx.bits", cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    assert (tmp_path / "rx.bits").read_text() == RECEIVED + "\n"

    r = run_cli("decode", *VAND, "--in", "rx.bits", "--out", "dec.bits",
                cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    assert (tmp_path / "dec.bits").read_text() == U + "\n"
    assert "guess 2" in r.stderr


def test_decode_ambiguous_exits_2(tmp_path):
    write(tmp_path / "rx.bits", AMBIG_Y)
    r = run_cli("decode", "--k", "16", "--w", "4", "--c", "3",
                "--in", "rx.bits", "--out", "dec.bits", cwd=tmp_path)
    assert r.returncode == 2
    assert not (tmp_path / "dec.bits").exists()
    for cand in AMBIG_CANDIDATES:
        assert cand in r.stderr


def test_decode_overlong_input_exits_3(tmp_path):
    write(tmp_path / "rx.bits", CODEWORD + "00")
    r = run_cli("decode", *VAND, "--in", "rx.bits", "--out", "dec.bits",
                cwd=tmp_path)
    assert r.returncode == 3
    assert "not decodable" in r.stderr


def test_bad_bit_file_exits_1(tmp_path):
    write(tmp_path / "msg.bits", "110x101001111000")
    r = run_cli("encode", *VAND, "--in", "msg.bits", "--out", "cw.bits",
                cwd=tmp_path)
    assert r.returncode == 1
    write(tmp_path / "empty.bits", "")
    r = run_cli("encode", *VAND, "--in", "empty.bits", "--out", "cw.bits",
                cwd=tmp_path)
    assert r.returncode == 1


def test_wrong_length_message_exits_1(tmp_path):
    write(tmp_path / "msg.bits", U + "1")
    r = run_cli("encode", *VAND, "--in", "msg.bits", "--out", "cw.bits",
                cwd=tmp_path)
    assert r.returncode == 1
    assert "expected k=16" in r.stderr


def test_missing_subcommand_and_bad_flags_exit_1(tmp_path):
    assert run_cli(cwd=tmp_path).returncode == 1
    assert run_cli("encode", "--k", "16", cwd=tmp_path).returncode == 1
    assert run_cli("frobnicate", cwd=tmp_path).returncode == 1


def test_invalid_pattern_exits_1(tmp_path):
    write(tmp_path / "cw.bits", CODEWORD)
    for bad in ("0:1", "3:1,1", "3:0,"):
        r = run_cli("corrupt", "--pattern", bad, "--in", "cw.bits",
                    "--out", "rx.bits", cwd=tmp_path)
        assert r.returncode == 1, bad


def test_corrupt_random_deterministic(tmp_path):
    write(tmp_path / "cw.bits", CODEWORD)
    args = ["corrupt", "--random", "--delta", "2", "--seed", "11", *VAND,
            "--in", "cw.bits", "--out", "rx.bits"]
    r1 = run_cli(*args, cwd=tmp_path)
    first = (tmp_path / "rx.bits").read_text()
    r2 = run_cli(*args, cwd=tmp_path)
    assert r1.returncode == r2.returncode == 0
    assert (tmp_path / "rx.bits").read_text() == first
    assert len(first.strip()) == 31
    assert "pattern" in r1.stderr


def test_corrupt_random_requires_seed_and_delta(tmp_path):
    write(tmp_path / "cw.bits", CODEWORD)
    r = run_cli("corrupt", "--random", "--delta", "2", "--in", "cw.bits",
                "--out", "rx.bits", cwd=tmp_path)
    assert r.returncode == 1


def test_bound_output(tmp_path):
    r = run_cli("bound", "--k", "4096", "--w", "12", "--c", "4", cwd=tmp_path)
    assert r.returncode == 0
    lines = dict(line.split("=", 1) for line in r.stdout.strip().split("\n"))
    assert lines["redundancy_bits"] == "61"
    assert lines["failure_bound"] == "0.0833333"
    assert lines["rate"] == "0.985326"
    assert lines["regime"] == "large-window"
    assert lines["windows"] == "1"


def test_bound_multi_output(tmp_path):
    r = run_cli("bound", "--k", "64", "--w", "4", "--c", "8", "--z", "2",
                cwd=tmp_path)
    assert r.returncode == 0
    assert "failure_bound=0.0439453" in r.stdout
    assert "windows=2" in r.stdout


def test_simulate_stdout_and_file(tmp_path):
    args = ["simulate", "--k-list", "64,128", "--c", "3", "--delta", "2",
            "--trials", "50", "--seed", "5"]
    r = run_cli(*args, cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().split("\n")
    assert lines[0].startswith("k,w,ell,c,z,delta,")
    assert len(lines) == 3
    assert lines[1].startswith("64,6,6,3,1,2,50,")

    r2 = run_cli(*args, "--out", "res.csv", cwd=tmp_path)
    assert r2.returncode == 0
    assert (tmp_path / "res.csv").read_text() == r.stdout
    assert r2.stdout == ""


def test_simulate_progress_on_stderr_only(tmp_path):
    r = run_cli("simulate", "--k-list", "64", "--c", "3", "--delta", "1",
                "--trials", "20", "--seed", "1", "--progress", cwd=tmp_path)
    assert r.returncode == 0
    assert r.stderr != ""
    assert r.stdout.startswith("k,w,ell,")


def test_simulate_rejects_double_delta(tmp_path):
    r = run_cli("simulate", "--k-list", "64", "--c", "3", "--delta", "1",
                "--delta-frac", "0.5", "--trials", "5", cwd=tmp_path)
    assert r.returncode == 1
