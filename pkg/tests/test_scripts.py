import csv
import importlib.util
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod


def test_sweep_regimes(tmp_path):
    mod = load("sweep_regimes")
    assert mod.main(["--ns", "60", "--step", "0.05", "--out-dir", str(tmp_path)]) == 0
    rows = list(csv.DictReader((tmp_path / "sweep_n60.csv").open()))
    assert rows[0]["regime"] == "CLIQUE_OVERLAP" and rows[-1]["regime"] == "REGULAR_SPLIT"


def test_oracle_table(tmp_path):
    mod = load("oracle_table")
    out = tmp_path / "t.csv"
    assert mod.main(["--max-n", "5", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 3 + 6
    for r in rows:
        assert int(r["minimum"]) <= int(r["construction_size"])
        if r["bound"]:
            assert float(r["bound"]) <= int(r["minimum"]) + int(r["n"])
