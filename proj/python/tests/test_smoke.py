from fractions import Fraction

import pytest

import commop


def test_parse_print_round_trip():
    a = commop.Operator("D^3 - 26/x^2*D - 28/x^3 + x^6/5832")
    assert str(a) == "D^3 - (26/x^2)*D + x^6/5832 - 28/x^3"
    assert a == commop.calL()
    assert commop.Operator(str(a)) == a
    assert commop.Operator.from_json(a.to_json()) == a
    assert a.order == 3
    assert a.coefficient(1) == "-26/x^2"


def test_parse_error_position():
    with pytest.raises(commop.ParseError, match="1:3"):
        commop.parse("D D")


def test_weyl_relation():
    d = commop.Operator("D")
    x = commop.Operator("x")
    assert d * x - x * d == commop.Operator("1")
    assert commop.commutator(d, x) == commop.Operator("1")


def test_commuting_pair_and_limit():
    assert commop.commutes(commop.l1(), commop.l2())
    cal = commop.calL()
    assert commop.l1().substitute_eps(0) == cal**3 - commop.Operator("1")
    assert commop.l2().substitute_eps(Fraction(0)) == cal**4 - cal


def test_burchnall_chaundy():
    assert commop.eval_bc(commop.l1(), commop.l2_mu()).is_zero()
    assert not commop.eval_bc(commop.l1(), commop.l2()).is_zero()
    assert commop.bc_function_identity()
    assert not commop.bc_function_identity(eps2_variant=True)


def test_non_commuting_pair_raises():
    with pytest.raises(commop.NonCommutingError):
        commop.eval_bc(commop.l1(), commop.l2() + commop.Operator("D"))


def test_derive_and_rank3():
    assert commop.derive("lambda", 9) == commop.l1()
    assert commop.derive("mu", 12) == commop.l2_mu()
    assert commop.verify_rank3(commop.l1(), "lambda")["pass"]
    assert not commop.verify_rank3(commop.l1() + commop.Operator("D"), "lambda")["pass"]


def test_right_reduce():
    a = commop.Operator("D^5 + x^3")
    t = commop.Operator("D^2 + 1/x*D")
    q, r = commop.right_reduce(a, t)
    assert q * t + r == a
    assert r.order < 2


def test_solve_commuting_calL():
    s = commop.solve_commuting(commop.calL(), 6, lo=-12, hi=12, eps_degree=0)
    assert s["consistent"] and s["verified"]
    assert s["contains"](commop.calL() ** 2)


def test_kn_check_small():
    r = commop.kn_check(points=[2, "3/2"], eps=-1, precision=40)
    assert r["pass"]
    assert r["log10_max_residual"] < -20


def test_verify_report():
    rep = commop.verify("limit")
    assert rep["outcome"] == "pass"
    assert rep["checks"][0]["name"] == "limit"


def test_version():
    assert commop.__version__


def test_report_matches_schema():
    import json
    from pathlib import Path

    jsonschema = pytest.importorskip("jsonschema")
    schema_path = Path(__file__).resolve().parents[2] / "docs" / "report.schema.json"
    schema = json.loads(schema_path.read_text())
    for suite in ("limit", "commute"):
        for literal in (False, True):
            jsonschema.validate(commop.verify(suite, literal=literal), schema)


def test_data_files_match_builtins():
    from pathlib import Path

    data = Path(__file__).resolve().parents[2] / "data"
    builtins = {"l1": commop.l1(), "l2": commop.l2(), "l2mu": commop.l2_mu(), "calL": commop.calL()}
    for name, op in builtins.items():
        assert commop.parse((data / f"{name}.op").read_text()) == op, name
    assert commop.Operator.from_json((data / "calL.json").read_text()) == commop.calL()
