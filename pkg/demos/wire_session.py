"""A full framed session over localhost TCP, with the frame transcript.

Run: python demos/wire_session.py
"""

import threading

from otframe.net import (SessionConfig, connect, listen_once, run_receiver,
                         run_sender)
from otframe.params import BackendId, Tier
from otframe.protocol import SenderInput

PORT = 39917
config = SessionConfig(BackendId.QCMDPC, Tier.TOY, k=4, lam=32)
messages = [f"message number {i} padded to 32B".encode().ljust(32) for i in range(4)]
reports = {}


def serve():
    transport = listen_once("127.0.0.1", PORT)
    try:
        reports["sender"] = run_sender(transport, SenderInput(messages), config)
    finally:
        transport.close()


thread = threading.Thread(target=serve)
thread.start()
transport = connect("127.0.0.1", PORT)
try:
    reports["receiver"] = run_receiver(transport, choice=2, config=config)
finally:
    transport.close()
thread.join()

receiver = reports["receiver"]
print(f"session {receiver.session_id.hex()}")
print(f"received: {receiver.output!r}")
print("\nreceiver transcript:")
for direction, frame_type, size in receiver.transcript:
    print(f"  {direction:>8}  {frame_type:<6} {size:>6} bytes")
print("\ntimings (ms):", {k: round(v, 2) for k, v in receiver.timings_ms.items()})
content = [t for t in (x[1] for x in receiver.transcript) if t in ("MSG1", "MSG2")]
print(f"protocol content frames in total: {content} (one per direction)")
assert receiver.output == messages[2]
