import pytest
from fastapi.testclient import TestClient

from techrace.model import cumulative_risk
from techrace.scenarios import build_preset
from techrace.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def limited_body(**over):
    body = {
        "p0": 20.0,
        "d0": 50.0,
        "g_p": 0.23,
        "p_max": 120.0,
        "kappa": 0.4,
        "theta": 0.0,
        "pi0": 0.10,
        "lambda0": 0.05,
        "eta": 0.0,
        "beta": 0.10,
        "tau": 40.0,
        "det_steps": [{"t": 3.0, "delta": 5.0}, {"t": 7.0, "delta": 4.0}],
        "horizon": 10.0,
    }
    body.update(over)
    return body


def test_presets_lists_twelve_variants(client):
    payload = client.get("/api/presets").json()
    assert len(payload["presets"]) == 12
    by_name = {p["name"]: p for p in payload["presets"]}
    assert by_name["transformative/baseline/opp"]["params"]["g_p"] == 1.19
    assert by_name["limited/moonshot/no-opp"]["params"]["det_steps"] == [
        {"t": 1.0, "delta": 12.0},
        {"t": 3.0, "delta": 10.0},
        {"t": 6.0, "delta": 10.0},
    ]


def test_presets_round_trip_through_evaluate(client):
    presets = client.get("/api/presets").json()["presets"]
    preset = next(p for p in presets if p["name"] == "limited/baseline/no-opp")
    body = dict(preset["params"])
    body["resolution"] = 50
    resp = client.post("/api/evaluate", json=body)
    assert resp.status_code == 200
    summary = resp.json()["summary"]
    assert summary["r"] == pytest.approx(0.170, abs=0.005)
    assert summary["crossing"] == pytest.approx(6.2712, abs=1e-3)


def test_evaluate_matches_library_bitwise(client):
    resp = client.post("/api/evaluate", json=limited_body())
    assert resp.status_code == 200
    r = resp.json()["summary"]["r"]
    assert r == cumulative_risk(build_preset("limited/baseline/no-opp"))


def test_evaluate_series_are_consistent(client):
    resp = client.post("/api/evaluate", json=limited_body(resolution=20))
    series = resp.json()["series"]
    lengths = {len(v) for v in series.values()}
    assert len(lengths) == 1
    summary = resp.json()["summary"]
    assert series["cumulative_r"][-1] == pytest.approx(summary["r"], abs=1e-6)
    assert series["t"][0] == 0.0
    assert series["t"][-1] == 10.0


def test_evaluate_zero_hazard(client):
    resp = client.post("/api/evaluate", json=limited_body(lambda0=0.0))
    assert resp.json()["summary"]["r"] == 0.0


def test_missing_field_is_a_400_naming_it(client):
    body = limited_body()
    del body["kappa"]
    resp = client.post("/api/evaluate", json=body)
    assert resp.status_code == 400
    assert any("kappa" in str(item.get("loc", ())) for item in resp.json()["detail"])


def test_invalid_parameters_are_a_400(client):
    resp = client.post("/api/evaluate", json=limited_body(g_p=-1.0))
    assert resp.status_code == 400


def test_resource_guards_are_422(client):
    assert client.post("/api/evaluate", json=limited_body(horizon=300.0)).status_code == 422
    body = limited_body()
    body["resolution"] = 20_000
    assert client.post("/api/evaluate", json=body).status_code == 422


def test_sweep_endpoint_surface(client):
    resp = client.post("/api/sweep", json={"parameter": "eta"})
    assert resp.status_code == 200
    records = resp.json()["records"]
    assert len(records) == 15
    point = next(r for r in records if r["value"] == 3.0 and r["regime"] == "transformative")
    assert point["r10"] == pytest.approx(1.441, abs=0.02)


def test_sweep_unknown_parameter_is_400(client):
    resp = client.post("/api/sweep", json={"parameter": "gamma"})
    assert resp.status_code == 400


def test_montecarlo_deterministic_repeat(client):
    body = limited_body()
    body.update(trials=20_000, seed=9)
    first = client.post("/api/montecarlo", json=body)
    second = client.post("/api/montecarlo", json=body)
    assert first.status_code == 200
    assert first.json() == second.json()


def test_montecarlo_agrees_with_quadrature(client):
    body = limited_body()
    body.update(trials=100_000, seed=1)
    payload = client.post("/api/montecarlo", json=body).json()
    analytic = cumulative_risk(build_preset("limited/baseline/no-opp"))
    assert abs(payload["mean_undetected"] - analytic) <= payload["ci99_mean"]


def test_montecarlo_trials_guard(client):
    body = limited_body()
    body.update(trials=20_000_000, seed=1)
    assert client.post("/api/montecarlo", json=body).status_code == 422


def test_cors_headers_emitted(client):
    resp = client.get("/api/presets", headers={"Origin": "http://localhost:5173"})
    assert resp.headers.get("access-control-allow-origin") == "*"


def test_cors_can_be_disabled():
    bare = TestClient(create_app(cors=False))
    resp = bare.get("/api/presets", headers={"Origin": "http://localhost:5173"})
    assert "access-control-allow-origin" not in resp.headers
