import json
import math

import pytest

from ifunction.cli import main, parse_z

from conftest import exp_params, suite_params


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, p in [("exp", exp_params()), ("suite", suite_params())]:
        path = tmp_path / f"{name}.json"
        path.write_text(p.to_json())
        out[name] = str(path)
    bf = {
        "m": 1,
        "n": 2,
        "upper": [
            {"a_re": 0, "a_im": 0, "alpha": 1, "exp": 2},
            {"a_re": -0.5, "a_im": 0, "alpha": 1, "exp": 1},
        ],
        "lower": [
            {"a_re": 0, "a_im": 0, "alpha": 1, "exp": 1},
            {"a_re": -1, "a_im": 0, "alpha": 1, "exp": 2},
        ],
    }
    (tmp_path / "bf.json").write_text(json.dumps(bf))
    out["bf"] = str(tmp_path / "bf.json")
    bad = {"m": 1, "n": 1, "upper": [{"a_re": 1, "a_im": 0, "alpha": 1, "exp": 1}], "lower": bf["lower"][:1]}
    (tmp_path / "bad.json").write_text(json.dumps(bad))
    out["bad"] = str(tmp_path / "bad.json")
    (tmp_path / "hbar.json").write_text(
        json.dumps({"upper_special": [[0.2, 1, 2.5]], "lower_plain": [[0.1, 0.5]]})
    )
    out["hbar"] = str(tmp_path / "hbar.json")
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_parse_z():
    assert parse_z("1")[0] == 1
    assert parse_z("-0.5,2")[0] == complex(-0.5, 2)
    z, lz = parse_z("2@180")
    assert z == -2 and lz.imag == math.pi
    assert parse_z("2@-180")[1].imag == -math.pi
    assert parse_z("1@90")[1] == pytest.approx(0.5j * math.pi)
    assert parse_z("0")[1] is None


def test_eval_exponential(files, capsys):
    code, out, _ = run(capsys, "eval", files["exp"], "--z", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"][0] == pytest.approx(0.3678794412, abs=1e-10)
    assert doc["value"][1] == pytest.approx(0.0, abs=1e-12)


def test_analyze_free_energy(files, capsys):
    code, out, _ = run(capsys, "analyze", files["bf"], "--z", "-0.4444,0")
    doc = json.loads(out)
    assert code == 0
    assert (doc["delta"], doc["mu"], doc["nabla"]) == pytest.approx((2, 0, 1.5))


def test_zero_z(files, capsys):
    code, out, err = run(capsys, "eval", files["exp"], "--z", "0")
    assert code == 2 and out == "" and "nonzero" in err


def test_invalid_params(files, capsys):
    code, _, err = run(capsys, "eval", files["bad"], "--z", "1")
    assert code == 2 and "coincides" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "eval", str(tmp_path / "none.json"), "--z", "1")
    assert code == 2


def test_no_admissible(files, capsys):
    code, _, err = run(capsys, "eval", files["exp"], "--z", "-1", "--method", "quadrature")
    assert code == 3 and "no admissible method" in err


def test_series(files, capsys):
    code, out, _ = run(capsys, "series", files["exp"], "--z", "0.5", "--terms", "30")
    doc = json.loads(out)
    assert code == 0 and doc["region"] == "inside"
    assert doc["terms"][2]["coefficient"] == pytest.approx([0.5, 0.0], abs=1e-15)
    assert doc["value"][0] == pytest.approx(math.exp(-0.5), abs=1e-12)


def test_series_precondition(files, capsys):
    code, _, err = run(capsys, "series", files["suite"])
    assert code == 3 and "not a positive integer" in err


def test_reduce_round_trip(files, capsys, tmp_path):
    code, out, _ = run(capsys, "reduce", files["suite"])
    assert code == 0
    path = tmp_path / "r.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "reduce", str(path))
    assert out2 == out


def test_compare(files, capsys):
    code, out, _ = run(capsys, "compare", files["exp"], "--z", "1@30")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] is True


def test_compare_unavailable(files, capsys):
    code, out, _ = run(capsys, "compare", files["suite"], "--z", "0.5")
    assert code == 3 and json.loads(out)["agree"] is None


def test_deterministic(files, capsys):
    outs = {run(capsys, "eval", files["suite"], "--z", "0.7")[1] for _ in range(2)}
    assert len(outs) == 1


def test_text_output(files, capsys):
    code, out, _ = run(capsys, "eval", files["exp"], "--z", "2", "--output", "text")
    assert code == 0 and "method: " in out


def test_special_free_energy(capsys):
    code, out, _ = run(capsys, "special", "gaussian_free_energy", "--d", "1", "--epsilon", "0.5")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["value"][0] == pytest.approx(-0.0680943192714, abs=1e-11)


def test_special_flag_form(capsys):
    code, out, _ = run(capsys, "special", "--special", "lrc_density_term", "--v-plus-r", "2", "--lam", "0.25")
    assert code == 0 and json.loads(out)["result"]["value"][0] == pytest.approx(math.log(4), abs=1e-9)


def test_special_feynman(capsys):
    code, out, _ = run(capsys, "special", "feynman_g", "--tau", "1.5", "--n", "2", "--mu", "1", "--m", "0.5", "--z", "0.5")
    assert code == 0 and json.loads(out)["result"]["method"] == "series"


def test_special_h_bar(files, capsys):
    code, out, _ = run(capsys, "special", "h_bar", "--spec", files["hbar"], "--z", "0.5")
    doc = json.loads(out)
    assert code == 0 and doc["params"]["m"] == 1 and "result" in doc


def test_special_errors(capsys):
    assert run(capsys, "special", "nonsense")[0] == 2
    assert run(capsys, "special", "gaussian_free_energy", "--d", "1")[0] == 2
    assert run(capsys, "special", "gaussian_free_energy", "--d", "-1", "--epsilon", "0.5")[0] == 2
    assert run(capsys, "special", "lrc_density_term", "--v-plus-r", "2", "--lam", "1.5")[0] == 2


def test_bad_tol(files, capsys):
    assert run(capsys, "eval", files["exp"], "--z", "1", "--tol", "-1")[0] == 2
