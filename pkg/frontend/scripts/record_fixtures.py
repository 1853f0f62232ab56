"""Record real service responses as JSON fixtures for the UI tests.

The UI test suite replays these bytes through a stubbed fetch, so every
number the tests see came out of the actual HTTP layer at least once.
Re-run after any service-side change:

    python3 scripts/record_fixtures.py
"""

import json
import time
from pathlib import Path

from fastapi.testclient import TestClient

from surrscope.service import create_app

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

SESSION_BODY = {
    "dataset": {"kind": "moons", "n": 1000, "noise": 0.1, "seed": 7},
    "blackbox": {"kind": "builtin_mlp"},
    "instance": {"kind": "inline", "values": [0.5, 0.25]},
}
RADII = [0.25 + i * (3.0 - 0.25) / 9 for i in range(10)]
FIT = {"n_samples": 512, "tol": 1e-6, "max_iter": 1000, "seed": 0}


def wait(client, job_id):
    for _ in range(6000):
        body = client.get(f"/jobs/{job_id}").json()
        if body["status"] in ("done", "failed"):
            assert body["status"] == "done", body
            return body
        time.sleep(0.01)
    raise RuntimeError("job never finished")


def dump(name, payload):
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(payload, indent=1) + "\n")
    print(path)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    with TestClient(create_app(threads=2)) as client:
        session = client.post("/sessions", json=SESSION_BODY).json()
        dump("session", session)
        sid = session["id"]

        surrogate = {}
        # 0.0 captures the constant-model path and -1.0 the service's
        # rejection, so both render paths replay real bytes
        for radius in RADII + [0.0, -1.0]:
            r = client.post(f"/sessions/{sid}/surrogate",
                            json={**FIT, "radius": radius,
                                  "boundary_resolution": 40})
            surrogate[repr(radius)] = r.json()
        assert surrogate["0.0"]["entry"]["degenerate"] is True
        assert "error" in surrogate["-1.0"]
        dump("surrogate_by_radius", surrogate)

        job = client.post(f"/sessions/{sid}/jobs/sweep",
                          json={**FIT, "radii": RADII})
        dump("sweep_job", wait(client, job.json()["job_id"]))

        job = client.post(f"/sessions/{sid}/jobs/bootstrap",
                          json={"radii": RADII, "B": 24, "n": 64,
                                "eval_n": 256, "tol": 1e-6, "max_iter": 1000,
                                "seed": 0})
        dump("bootstrap_job", wait(client, job.json()["job_id"]))

        job = client.post(f"/sessions/{sid}/jobs/path",
                          json={"radius": 0.6, "n_samples": 512, "tol": 1e-6,
                                "max_iter": 1000, "seed": 0})
        path = wait(client, job.json()["job_id"])
        first = path["result"]["entries"][0]
        assert first["l0"] == 0, "strongest C must zero the model"
        assert all(c == 0.0 for c in first["coefficients"])
        dump("path_job", path)

        single = client.post(f"/sessions/{sid}/jobs/path",
                             json={"radius": 0.6, "C_grid": [1.0],
                                   "n_samples": 512, "tol": 1e-6,
                                   "max_iter": 1000, "seed": 0})
        dump("path_single_C", wait(client, single.json()["job_id"]))

        dump("export", client.get(f"/sessions/{sid}/export").json())


if __name__ == "__main__":
    main()
