import os
import subprocess
from fractions import Fraction

import qhorn


def test_version():
    assert qhorn.__version__


def test_schubert_basics():
    assert qhorn.codim([1, 4], 4) == 2
    assert qhorn.grassmann_dual([3, 4, 5, 7, 8], 8) == [3, 7, 8]
    assert qhorn.grassmann_dual([2, 5], 5) == [2, 3, 5]
    assert qhorn.scale_index([1, 4], 4, 2) == [1, 6]
    assert qhorn.delta([1, 4], 4) == [Fraction(1, 2), Fraction(-1, 2)]
    assert qhorn.shift_s([Fraction(1, 2), Fraction(-1, 2)]) == [Fraction(0), Fraction(0)]
    assert qhorn.degree_from_cycles([[1, 4], [2, 3], [1, 2]], 4) == 1
    assert qhorn.degree_from_cycles([[1, 2], [1, 3]], 4) is None


def test_gw_values():
    assert qhorn.gw(4, 2, 1, 0, [[1, 4], [2, 3], [1, 2]]) == 1
    assert qhorn.fusion_oracle(4, 2, 1, [[1, 4], [2, 3], [1, 2]]) == 1
    egg = [[3, 4, 5, 7, 8, 10, 11, 12], [2, 3, 5, 6, 8, 9, 11, 12],
           [2, 3, 5, 6, 8, 9, 11, 12]]
    assert qhorn.classical_intersection(12, 8, egg) == 6
    assert qhorn.moduli_dim(egg, 12) == 6
    assert qhorn.lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
    assert qhorn.horn_nonvanishing(4, 2, 1, [[1, 4], [2, 3], [1, 2]])


def test_polyrigidity():
    ext = [[3, 5, 6, 8, 9], [2, 4, 5, 7, 9], [2, 3, 5, 8, 9]]
    assert qhorn.is_polyrigid(9, 5, 0, 0, ext)
    rep = qhorn.polyrigid_report(9, 5, 0, 0, ext)
    assert rep["polyrigid"]
    assert [[5], [4], [2]] in [t["K"] for t in rep["evidence"]]
    assert qhorn.f_of_n(9, 5, 0, 0, ext, 3) == 1


def test_inequality_system():
    recs = qhorn.inequalities(2, 3, classify=True, lp=True)
    assert len(recs) == 4
    assert all(r["polyrigid"] and r["lp_irredundant"] for r in recs)
    rep = qhorn.membership(2, 3, [["1/2", "-1/2"], [0, 0], [0, 0]])
    assert not rep["member"]


def test_witness_and_nori():
    w = qhorn.witness_weights(5, 2, 0, [[2, 5], [2, 5], [2, 5]])
    assert w is not None
    assert w["c"] == Fraction(1, 3)
    nori = qhorn.nori_instance([2, 2, 1], 4)
    assert nori["gw"] == 1
    assert nori["indices"] == [[2, 4], [2, 4], [1, 4]]


def test_cli_roundtrip():
    cli = os.environ.get("QHORN_CLI")
    if not cli:
        return
    out = subprocess.run(
        [cli, "gw", "--n", "4", "--r", "2", "--d", "1", "--D", "0", "--cycles",
         "{1,4}", "{2,3}", "{1,2}"],
        capture_output=True, text=True, check=True)
    assert "= 1" in out.stdout
