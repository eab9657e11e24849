"""CLI surface: every subcommand drives the library end to end."""

import json
import socket
import threading
import time

import pytest
from click.testing import CliRunner

from otframe.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_params_lists_tiers(runner):
    result = runner.invoke(main, ["params"])
    assert result.exit_code == 0
    assert "QCMDPC" in result.output
    assert "r=10163" in result.output


def test_params_with_estimate_file(runner, tmp_path):
    rows = [{"r": 10163, "w": 142, "t": 134, "attack": "message-prange",
             "workfactor_bits": 134.6, "target_bits": 128, "delta": 6.6}]
    path = tmp_path / "est.json"
    path.write_text(json.dumps(rows))
    result = runner.invoke(main, ["params", "--estimate-file", str(path)])
    assert result.exit_code == 0
    assert "message-prange" in result.output


def test_testvec_emit_and_verify(runner, tmp_path):
    out = tmp_path / "v.vec"
    result = runner.invoke(main, ["testvec", "--backend", "qcmdpc", "--tier", "toy",
                                  "--seed", "cli-seed", "--out", str(out)])
    assert result.exit_code == 0, result.output
    result = runner.invoke(main, ["testvec", "--verify", str(out)])
    assert result.exit_code == 0
    assert "ok" in result.output
    tampered = out.read_text().replace("choice = 0001", "choice = 0000")
    bad = tmp_path / "bad.vec"
    bad.write_text(tampered)
    result = runner.invoke(main, ["testvec", "--verify", str(bad)])
    assert result.exit_code == 1


def test_bench_table(runner, tmp_path):
    out = tmp_path / "bench.json"
    result = runner.invoke(main, ["bench", "--backend", "qcmdpc", "--tier", "toy",
                                  "--iterations", "2", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = json.loads(out.read_text())
    assert [r["op"] for r in rows] == ["keygen", "encrypt", "decrypt"]


def test_sender_receiver_over_tcp(runner, tmp_path):
    msg0 = tmp_path / "m0.bin"
    msg1 = tmp_path / "m1.bin"
    msg0.write_bytes(bytes([1]) * 32)
    msg1.write_bytes(bytes([2]) * 32)
    received = tmp_path / "out.bin"
    port = _free_port()
    results = {}

    def sender_thread():
        r = CliRunner().invoke(main, [
            "sender", "--backend", "lpn", "--tier", "toy", "--k", "2",
            "--msg-file", str(msg0), "--msg-file", str(msg1),
            "--listen", f"127.0.0.1:{port}", "--seed", "cli-s"])
        results["sender"] = r

    th = threading.Thread(target=sender_thread)
    th.start()
    time.sleep(0.3)
    result = None
    for _ in range(30):
        result = runner.invoke(main, [
            "receiver", "--backend", "lpn", "--tier", "toy", "--k", "2",
            "--choice", "1", "--connect", f"127.0.0.1:{port}",
            "--seed", "cli-r", "--out", str(received)])
        if result.exit_code == 0:
            break
        time.sleep(0.2)
    th.join()
    assert results["sender"].exit_code == 0, results["sender"].output
    assert result.exit_code == 0, result.output
    assert received.read_bytes() == bytes([2]) * 32


def test_sender_rejects_unequal_message_lengths(runner, tmp_path):
    msg0 = tmp_path / "m0.bin"
    msg1 = tmp_path / "m1.bin"
    msg0.write_bytes(bytes(32))
    msg1.write_bytes(bytes(16))
    result = runner.invoke(main, [
        "sender", "--backend", "lpn", "--tier", "toy", "--k", "2",
        "--msg-file", str(msg0), "--msg-file", str(msg1),
        "--listen", "127.0.0.1:1"])
    assert result.exit_code != 0
    assert "same length" in result.output


def test_receiver_requires_endpoint(runner):
    result = runner.invoke(main, ["receiver", "--backend", "lpn", "--tier", "toy",
                                  "--choice", "0"])
    assert result.exit_code != 0


def _free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]
