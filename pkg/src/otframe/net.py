"""Stream-transport runner for the two roles.

Works over any reliable ordered byte stream (the CLI uses TCP). The
receiver speaks first: it picks the 16-byte session id and proposes the
session parameters in HELLO; the sender either echoes them byte-for-byte
or aborts before any protocol content flows. Each side then transmits
exactly one protocol flight (MSG1 from the receiver, MSG2 from the
sender) and a closing BYE.

Channels are assumed authenticated out of band; HELLO performs parameter
negotiation only.
"""

from __future__ import annotations

import socket
import time
from dataclasses import dataclass, field

from .oracle import OracleContext
from .params import BackendId, Tier, get_params
from .pke import get_backend
from .protocol import (SenderInput, receiver_finish, receiver_round1,
                       sender_round2)
from .rng import RandomSource, SystemRandomSource
from .wire import (Frame, FrameType, Hello, MalformedError, decode_frame,
                   decode_hello, decode_msg1, decode_msg2, encode_frame,
                   encode_hello, encode_msg1, encode_msg2, FRAME_HEADER)


class SessionAborted(Exception):
    pass


@dataclass(frozen=True)
class SessionConfig:
    backend_id: BackendId
    tier: Tier
    k: int = 2
    lam: int = 32

    def validate(self) -> None:
        get_params(self.backend_id, self.tier)
        if self.backend_id == BackendId.ELGAMAL and self.tier == Tier.TOY:
            raise ValueError("the toy ElGamal group is refused on the wire")
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.lam < 16:
            raise ValueError("lambda must be at least 16")


@dataclass
class Report:
    role: str
    session_id: bytes = b""
    transcript: list[tuple[str, str, int]] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)
    bytes_sent: int = 0
    bytes_received: int = 0

    def content_frames(self, direction: str) -> list[str]:
        return [t for d, t, _ in self.transcript
                if d == direction and t != FrameType.BYE.name]


@dataclass
class ReceiverReport(Report):
    output: bytes = b""
    decrypt_failed: bool = False


@dataclass
class SenderReport(Report):
    pass


class StreamTransport:
    """Framed I/O over a socket-like object (sendall/recv)."""

    def __init__(self, sock):
        self.sock = sock

    def _read_exact(self, n: int) -> bytes:
        chunks = []
        got = 0
        while got < n:
            chunk = self.sock.recv(n - got)
            if not chunk:
                raise SessionAborted("peer closed the stream")
            chunks.append(chunk)
            got += len(chunk)
        return b"".join(chunks)

    def send_frame(self, frame: Frame, report: Report) -> None:
        raw = encode_frame(frame)
        self.sock.sendall(raw)
        report.bytes_sent += len(raw)
        report.transcript.append(("sent", frame.frame_type.name, len(raw)))

    def recv_frame(self, report: Report) -> Frame:
        header = self._read_exact(FRAME_HEADER.size)
        plen = int.from_bytes(header[-4:], "big")
        if plen > (1 << 26):
            raise MalformedError("oversized payload")
        raw = header + self._read_exact(plen)
        frame = decode_frame(raw)
        report.bytes_received += len(raw)
        report.transcript.append(("received", frame.frame_type.name, len(raw)))
        return frame

    def close(self) -> None:
        try:
            self.sock.close()
        except OSError:
            pass


def _expect(frame: Frame, ftype: FrameType, session_id: bytes | None) -> Frame:
    if frame.frame_type != ftype:
        raise SessionAborted(f"expected {ftype.name}, got {frame.frame_type.name}")
    if session_id is not None and frame.session_id != session_id:
        raise SessionAborted("session id mismatch")
    return frame


def run_receiver(transport: StreamTransport, choice: int, config: SessionConfig,
                 rng: RandomSource | None = None) -> ReceiverReport:
    rng = rng or SystemRandomSource()
    config.validate()
    report = ReceiverReport(role="receiver")
    sid = rng.read(16)
    report.session_id = sid
    hello = Hello(config.backend_id, config.tier, config.k, config.lam)

    t0 = time.perf_counter()
    transport.send_frame(Frame(FrameType.HELLO, sid, encode_hello(hello)), report)
    echo = decode_hello(_expect(transport.recv_frame(report), FrameType.HELLO, sid).payload)
    if echo != hello:
        raise SessionAborted("sender did not accept the proposed parameters")
    report.timings_ms["hello"] = 1e3 * (time.perf_counter() - t0)

    t0 = time.perf_counter()
    params = get_params(config.backend_id, config.tier)
    backend = get_backend(params)
    ctx = OracleContext(sid, config.backend_id, config.lam)
    state, msg1 = receiver_round1(backend, ctx, config.k, choice, rng)
    report.timings_ms["round1"] = 1e3 * (time.perf_counter() - t0)

    transport.send_frame(Frame(FrameType.MSG1, sid, encode_msg1(msg1)), report)
    frame = _expect(transport.recv_frame(report), FrameType.MSG2, sid)

    t0 = time.perf_counter()
    msg2 = decode_msg2(frame.payload)
    output = receiver_finish(state, msg2, rng)
    report.timings_ms["finish"] = 1e3 * (time.perf_counter() - t0)

    transport.send_frame(Frame(FrameType.BYE, sid, b""), report)
    _expect(transport.recv_frame(report), FrameType.BYE, sid)
    report.output = output
    report.decrypt_failed = state.decrypt_failed
    return report


def run_sender(transport: StreamTransport, sender_input: SenderInput,
               config: SessionConfig, rng: RandomSource | None = None) -> SenderReport:
    rng = rng or SystemRandomSource()
    config.validate()
    if sender_input.k != config.k or sender_input.lam != config.lam:
        raise ValueError("sender input does not match the session config")
    report = SenderReport(role="sender")

    t0 = time.perf_counter()
    frame = _expect(transport.recv_frame(report), FrameType.HELLO, None)
    sid = frame.session_id
    report.session_id = sid
    hello = decode_hello(frame.payload)
    expected = Hello(config.backend_id, config.tier, config.k, config.lam)
    if hello != expected:
        # abort before any protocol content flows
        raise SessionAborted(
            f"negotiation mismatch: peer proposed {hello}, configured {expected}")
    transport.send_frame(Frame(FrameType.HELLO, sid, encode_hello(hello)), report)
    report.timings_ms["hello"] = 1e3 * (time.perf_counter() - t0)

    frame = _expect(transport.recv_frame(report), FrameType.MSG1, sid)

    t0 = time.perf_counter()
    msg1 = decode_msg1(frame.payload)
    params = get_params(config.backend_id, config.tier)
    backend = get_backend(params)
    ctx = OracleContext(sid, config.backend_id, config.lam)
    msg2 = sender_round2(backend, ctx, sender_input, msg1, rng)
    report.timings_ms["round2"] = 1e3 * (time.perf_counter() - t0)

    transport.send_frame(Frame(FrameType.MSG2, sid, encode_msg2(msg2)), report)
    _expect(transport.recv_frame(report), FrameType.BYE, sid)
    transport.send_frame(Frame(FrameType.BYE, sid, b""), report)
    return report


def connect(host: str, port: int, timeout: float = 30.0) -> StreamTransport:
    sock = socket.create_connection((host, port), timeout=timeout)
    return StreamTransport(sock)


def listen_once(host: str, port: int, timeout: float = 30.0) -> StreamTransport:
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as srv:
        srv.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        srv.bind((host, port))
        srv.listen(1)
        srv.settimeout(timeout)
        conn, _ = srv.accept()
        conn.settimeout(timeout)
        return StreamTransport(conn)
