"""Drive the HTTP workbench API in-process, no server socket needed.

The same endpoints are served by `triscope serve`; the test client here
exercises the exact application object.
"""

import tempfile

from fastapi.testclient import TestClient

from triscope import create_app

app = create_app(tempfile.mkdtemp(prefix="triscope-demo-"))
api = TestClient(app)

# load a context: TSV body, one triple per line
tsv = open("fixtures/bookmarks.tsv").read()
shape = api.post("/context", content=tsv).json()
print("loaded:", shape)

# start a run at rho_min=0; thresholds ride in the body as exact strings
run = api.post("/runs", json={"rho_min": "0"}).json()
print(f"\nrun at rho_min={run['rho_min']}: {run['count']} triclusters")
print("density histogram:", run["density_histogram"])

token = run["rho_key"]  # fractions use '_' for '/' inside URL paths

heat = api.get(f"/runs/{token}/heatmap", params={"plane": "GM"}).json()
print("\nGM heatmap rows:")
for label, row in zip(heat["rows"], heat["counts"]):
    print(f"  {label}: {row}")

cell = api.get(f"/runs/{token}/cell/u2/i2").json()
print(f"\ncell (u2, i2) holds {cell['count']} triclusters:")
for t in cell["triclusters"]:
    print(f"  rho={t['density']} modus={t['modus']}")

rec = api.get(f"/runs/{token}/recommend/u2").json()
print(f"\nrecommend u2: similarity {rec['similarity']}, "
      f"tags {rec['recommended_tags']}, sites {rec['recommended_resources']}")

# annotate a finding; the log is replayed when the service restarts
key = cell["triclusters"][0]["key"]
note = api.post("/annotations", json={
    "tricluster_key": key,
    "verdict": "meaningful",
    "note": "dense core shared by all three users",
}).json()
print(f"\nannotated {key[:12]} at {note['timestamp']}")
print("stored annotations:", len(api.get("/annotations").json()["annotations"]))

# exhaustive concept oracles stay available for desk-size contexts
tri = api.get("/concepts/tri").json()
print(f"\ntriadic concepts via API: {tri['count']}")
