"""Benchmark row shape and test-vector emit/verify."""

import pytest

from otframe.bench import bench, format_table
from otframe.params import BackendId, Tier
from otframe.testvec import emit, parse, verify


def test_bench_single_iteration_has_three_rows():
    rows = bench(BackendId.QCMDPC, Tier.TOY, 1)
    assert [r["op"] for r in rows] == ["keygen", "encrypt", "decrypt"]
    for r in rows:
        assert r["median_ns"] > 0
        assert r["kcycles_est"] > 0
        assert r["iterations"] == 1
    assert "decrypt" in format_table(rows)


def test_bench_rejects_bad_iterations():
    with pytest.raises(ValueError):
        bench(BackendId.QCMDPC, Tier.TOY, 0)


@pytest.mark.parametrize("backend_id,tier", [
    (BackendId.ELGAMAL, Tier.TOY), (BackendId.QCMDPC, Tier.TOY),
    (BackendId.LPN, Tier.TOY)], ids=["ELGAMAL", "QCMDPC", "LPN"])
def test_testvec_emit_verify_roundtrip(backend_id, tier):
    text = emit(backend_id, tier, 2, 32, 1, b"vec-seed")
    assert verify(text) == []
    seed, fields = parse(text)
    assert seed == b"vec-seed"
    assert len(fields["output"]) == 32
    assert fields["output"] == fields["message_1"]


def test_testvec_detects_tampering():
    text = emit(BackendId.QCMDPC, Tier.TOY, 2, 32, 0, b"tamper")
    lines = text.splitlines()
    idx = next(i for i, line in enumerate(lines) if line.startswith("msg2 = "))
    name, value = lines[idx].split(" = ")
    flipped = f"{value[:-2]}{'00' if value[-2:] != '00' else '01'}"
    lines[idx] = f"{name} = {flipped}"
    assert "msg2" in verify("\n".join(lines))


def test_testvec_requires_seed_comment():
    with pytest.raises(ValueError):
        parse("backend = 02\n")


def test_testvec_k4():
    text = emit(BackendId.LPN, Tier.TOY, 4, 32, 3, b"k4")
    assert verify(text) == []
    _, fields = parse(text)
    assert fields["output"] == fields["message_3"]
