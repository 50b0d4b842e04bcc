from pathlib import Path

import pytest

import roughdxl

DATA = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture
def ft_session():
    s = roughdxl.Session()
    s.load_table(DATA / "flu.csv", "flu")
    s.load_table(DATA / "patient.csv", "patient")
    s.load_program_file(DATA / "ft.dxl")
    return s


def test_ft_answers(ft_session):
    assert ft_session.query("ft(3)") is True
    assert ft_session.query("~ft(4)") is False
    assert ft_session.query("boundary(ft(X))") == [{"X": "2"}, {"X": "3"}]
    assert ft_session.query("lower(ft(X))") == [{"X": "4"}]
    assert ft_session.ask("lower(~ft(X))") == "{X=1}"


def test_classify(ft_session):
    assert ft_session.query("ft(2)?") == "top"
    assert ft_session.query("ft(99)?") == "bottom"
    assert ft_session.query("ft(X)?") == {
        "boundary": [{"X": "2"}, {"X": "3"}],
        "lower": [{"X": "4"}],
        "lower_neg": [{"X": "1"}],
    }


def test_flu_regions():
    s = roughdxl.Session()
    s.load_table(DATA / "flu.csv", "flu")
    regions = s.regions("flu")
    assert regions["lower"] == [("high", "yes", "yes", "yes")]
    assert sorted(regions["lower_neg"]) == [("high", "no", "no", "no"), ("normal", "no", "no", "no")]
    assert len(regions["boundary"]) == 3
    assert s.relations() == "flu/4 pos=4 neg=5 lower=1 boundary=3\n"


def test_table_text_and_step():
    s = roughdxl.Session()
    s.load_table_text("a,b,d\nx,y,yes\nx,y,no\nx,z,?\n", "t")
    assert s.query("boundary(t(x, y))") is True
    out, diag, quit_ = s.step("t(x, z)?")
    assert (out, diag, quit_) == ("bottom\n", "", False)
    assert s.step(":quit")[2] is True


def test_text_helpers():
    assert roughdxl.canonical_program("~p(X) :- q(X),r(X).") == "~p(X) :- q(X), r(X).\n"
    assert roughdxl.tau("lower(p(X))") == "p(X), not p⁻(X)"
    assert "q_neg(a)." in roughdxl.export_definite("~q(a).")


def test_errors():
    s = roughdxl.Session()
    with pytest.raises(roughdxl.ParseError):
        s.query("p(")
    with pytest.raises(roughdxl.LoadError):
        s.load_program_file(DATA / "missing.dxl")
    with pytest.raises(ValueError):
        s.load_table_text("a,d\nx,maybe\n", "t")
