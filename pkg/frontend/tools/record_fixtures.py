"""Record a deterministic session against the live service as test fixtures.

Drives 20 finished rounds against moody(1/2) with a fixed seed through the
in-process FastAPI app and dumps every request/response pair to
tests/fixtures/moody_half_session.json.  The browser tests replay the same
client policy against these exchanges, so the UI is checked against real
server behavior without needing a Python process at npm-test time.

Client policy (mirrored by the TypeScript test):
  - pick door (finished_rounds % 3) + 1
  - when offered, decide "stay" on even finished_rounds, "switch" on odd
  - after every response, GET the session state
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from montylab.service import create_app

SEED = 424242
ROUNDS = 20

exchanges = []


def call(client, method, path, body=None):
    if method == "POST":
        response = client.post(path, json=body)
    else:
        response = client.get(path)
    exchanges.append(
        {
            "method": method,
            "path": path,
            "body": body,
            "status": response.status_code,
            "response": response.json(),
        }
    )
    return response.json()


def main() -> None:
    client = TestClient(create_app())
    created = call(
        client,
        "POST",
        "/api/v1/session",
        {"host": {"kind": "moody", "p": "1/2"}, "prior": "1/2", "seed": SEED},
    )
    session_id = created["session_id"]
    base = f"/api/v1/session/{session_id}"

    finished = 0
    while finished < ROUNDS:
        state = call(client, "POST", f"{base}/pick", {"door": finished % 3 + 1})["state"]
        call(client, "GET", base)
        if state["phase"] == "awaiting_decision":
            decision = "stay" if finished % 2 == 0 else "switch"
            state = call(client, "POST", f"{base}/decision", {"decision": decision})["state"]
            call(client, "GET", base)
        assert state["phase"] == "finished"
        finished += 1

    out = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "moody_half_session.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(
        json.dumps({"session_id": session_id, "rounds": ROUNDS, "exchanges": exchanges}, indent=1)
    )
    print(f"recorded {len(exchanges)} exchanges over {ROUNDS} rounds -> {out}")


if __name__ == "__main__":
    main()
