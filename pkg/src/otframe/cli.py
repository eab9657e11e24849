"""Command-line interface: sender, receiver, bench, testvec, params."""

from __future__ import annotations

import json
import sys

import click

from . import bench as bench_mod
from . import testvec as testvec_mod
from .net import (SessionConfig, connect, listen_once, run_receiver, run_sender)
from .params import (BackendId, Tier, available_tiers, get_params,
                     QcmdpcParams)
from .protocol import SenderInput
from .rng import derive_source


def _backend_opt(required=True):
    return click.option("--backend", type=click.Choice([b.name for b in BackendId],
                        case_sensitive=False), required=required)


def _tier_opt(required=True):
    return click.option("--tier", type=click.Choice([t.name for t in Tier],
                        case_sensitive=False), required=required)


def _endpoint(listen: str | None, connect_addr: str | None):
    if bool(listen) == bool(connect_addr):
        raise click.UsageError("exactly one of --listen/--connect is required")
    spec = listen or connect_addr
    host, _, port = spec.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError("endpoint must be host:port")
    if listen:
        return listen_once(host, int(port))
    return connect(host, int(port))


def _report_dict(report) -> dict:
    out = {
        "role": report.role,
        "session_id": report.session_id.hex(),
        "bytes_sent": report.bytes_sent,
        "bytes_received": report.bytes_received,
        "transcript": [{"dir": d, "type": t, "bytes": n} for d, t, n in report.transcript],
        "timings_ms": report.timings_ms,
    }
    if hasattr(report, "decrypt_failed"):
        out["decrypt_failed"] = report.decrypt_failed
    return out


@click.group()
def main():
    """Two-round 1-out-of-k oblivious transfer over TCP."""


@main.command()
@_backend_opt()
@_tier_opt()
@click.option("--k", type=int, default=2, show_default=True)
@click.option("--lam", "--lambda", "lam", type=int, default=32, show_default=True,
              help="Transferred string length in bytes.")
@click.option("--msg-file", "msg_files", multiple=True, type=click.Path(exists=True),
              help="One file per message, k times.")
@click.option("--listen", metavar="HOST:PORT")
@click.option("--connect", "connect_addr", metavar="HOST:PORT")
@click.option("--seed", help="Deterministic run (testing only).")
@click.option("--out", type=click.Path(), help="Write the JSON report here.")
def sender(backend, tier, k, lam, msg_files, listen, connect_addr, seed, out):
    """Run the sending role with k equal-length messages."""
    if len(msg_files) != k:
        raise click.UsageError(f"--msg-file must be given exactly k={k} times")
    messages = [open(path, "rb").read() for path in msg_files]
    if len({len(m) for m in messages}) != 1:
        raise click.UsageError("messages must all have the same length")
    if len(messages[0]) != lam:
        raise click.UsageError(f"messages are {len(messages[0])} bytes; --lam says {lam}")
    config = SessionConfig(BackendId[backend.upper()], Tier[tier.upper()], k, lam)
    transport = _endpoint(listen, connect_addr)
    try:
        report = run_sender(transport, SenderInput(messages), config,
                            derive_source(seed, "sender") if seed else None)
    finally:
        transport.close()
    text = json.dumps(_report_dict(report), indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


@main.command()
@_backend_opt()
@_tier_opt()
@click.option("--k", type=int, default=2, show_default=True)
@click.option("--lam", "--lambda", "lam", type=int, default=32, show_default=True)
@click.option("--choice", type=int, required=True, help="Index of the wanted message.")
@click.option("--listen", metavar="HOST:PORT")
@click.option("--connect", "connect_addr", metavar="HOST:PORT")
@click.option("--seed", help="Deterministic run (testing only).")
@click.option("--out", type=click.Path(), help="Write the received bytes here.")
def receiver(backend, tier, k, lam, choice, listen, connect_addr, seed, out):
    """Run the receiving role and obtain exactly one message."""
    config = SessionConfig(BackendId[backend.upper()], Tier[tier.upper()], k, lam)
    transport = _endpoint(listen, connect_addr)
    try:
        report = run_receiver(transport, choice, config,
                              derive_source(seed, "receiver") if seed else None)
    finally:
        transport.close()
    if out:
        with open(out, "wb") as fh:
            fh.write(report.output)
    else:
        click.echo(report.output.hex())
    click.echo(json.dumps(_report_dict(report), indent=2), err=True)


@main.command()
@_backend_opt()
@_tier_opt()
@click.option("--iterations", type=int, default=10, show_default=True)
@click.option("--seed", help="Deterministic benchmark inputs.")
@click.option("--out", type=click.Path(), help="Write JSON rows here.")
def bench(backend, tier, iterations, seed, out):
    """Median keygen/encrypt/decrypt costs for one backend tier."""
    rows = bench_mod.bench(BackendId[backend.upper()], Tier[tier.upper()],
                           iterations, derive_source(seed, "bench") if seed else None)
    click.echo(bench_mod.format_table(rows))
    if out:
        with open(out, "w") as fh:
            json.dump(rows, fh, indent=2)
            fh.write("\n")


@main.command()
@_backend_opt(required=False)
@_tier_opt(required=False)
@click.option("--k", type=int, default=2, show_default=True)
@click.option("--lam", "--lambda", "lam", type=int, default=32, show_default=True)
@click.option("--choice", type=int, default=1, show_default=True)
@click.option("--seed", default="0", show_default=True)
@click.option("--out", type=click.Path(), help="Emit a vector file here.")
@click.option("--verify", "verify_path", type=click.Path(exists=True),
              help="Verify an existing vector file instead of emitting.")
def testvec(backend, tier, k, lam, choice, seed, out, verify_path):
    """Emit or verify known-answer vector files."""
    if verify_path:
        mismatched = testvec_mod.verify(open(verify_path).read())
        if mismatched:
            click.echo(f"MISMATCH: {', '.join(sorted(mismatched))}")
            sys.exit(1)
        click.echo("ok")
        return
    if not backend or not tier:
        raise click.UsageError("--backend and --tier are required to emit")
    text = testvec_mod.emit(BackendId[backend.upper()], Tier[tier.upper()],
                            k, lam, choice, seed.encode())
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@_backend_opt(required=False)
@click.option("--estimate-file", type=click.Path(exists=True),
              help="JSON attack-cost table produced by the estimator tool.")
def params(backend, estimate_file):
    """List registered parameter tiers (validated at load)."""
    backends = [BackendId[backend.upper()]] if backend else list(BackendId)
    for b in backends:
        for tier in available_tiers(b):
            p = get_params(b, tier)
            extra = ""
            if isinstance(p, QcmdpcParams):
                extra = f" r={p.r} w={p.w} t={p.t}"
            click.echo(f"{b.name:<8} {tier.name:<7} kappa={p.kappa}{extra}")
    if estimate_file:
        rows = json.load(open(estimate_file))
        click.echo("\nestimated attack costs:")
        click.echo(f"{'params':<28}{'attack':<18}{'workfactor':>11}{'target':>8}{'delta':>8}")
        for row in rows:
            label = f"r={row['r']} w={row['w']} t={row['t']}"
            click.echo(f"{label:<28}{row['attack']:<18}{row['workfactor_bits']:>11.1f}"
                       f"{row['target_bits']:>8}{row['delta']:>8.1f}")


if __name__ == "__main__":
    main()
