"""The read-only query service: start it, hit every endpoint, shut down.

Run: python demos/06_serve_and_query.py
"""

import json
import urllib.request

import langscore as ls
from langscore.service import create_server, run_in_thread

dataset = ls.load_bundled_dataset()
server = create_server("127.0.0.1", 0, dataset, published=ls.load_bundled_published())
thread = run_in_thread(server)
host, port = server.server_address
base = f"http://{host}:{port}"
print(f"service up at {base} (ephemeral port, daemon thread)\n")


def get(path):
    with urllib.request.urlopen(base + path) as response:
        return json.loads(response.read())


def post(path, payload):
    request = urllib.request.Request(
        base + path,
        data=json.dumps(payload).encode("utf-8"),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(request) as response:
        return json.loads(response.read())


doc = get("/api/v1/dataset")
print(f"GET /api/v1/dataset -> {len(doc['subjects'])} subjects, "
      f"{len(doc['framework']['parameters'])} parameters, "
      f"{len(doc['ratings'])} rating cells (provenance included)")

score = get("/api/v1/score?profile=default")
print(f"GET /api/v1/score   -> ranking {score['ranking']}")

whatif = post("/api/v1/whatif", {"weights": {"industry-demand": 3}, "category": "environmental-only"})
print(f"POST /api/v1/whatif (demand x3, env only) -> {whatif['ranking']}")

sweep = post("/api/v1/sweep", {"parameter": "industry-demand", "from": 1, "to": 5, "steps": 21})
crossings = [(c["subjects"], round(c["weight"], 4)) for c in sweep["crossovers"]]
print(f"POST /api/v1/sweep  -> {len(sweep['grid'])} grid points, crossovers {crossings}")

discrepancies = get("/api/v1/discrepancies")
print(f"GET /api/v1/discrepancies -> {len(discrepancies['entries'])} entries")

print("\nThe what-if UI consumes exactly these endpoints; serve it with:")
print("  langscore serve --addr 127.0.0.1:8099 --ui frontend/dist")

server.shutdown()
server.server_close()
thread.join(timeout=5)
print("service stopped")
