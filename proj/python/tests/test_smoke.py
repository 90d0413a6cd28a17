from fractions import Fraction

import pytest

import rectcolor as rc


def cross_grid():
    return rc.Instance([("A", 0, 1, 10, 2), ("B", 0, 5, 10, 6), ("C", 1, 0, 2, 10), ("D", 5, 0, 6, 10)])


def test_instance_basics():
    inst = rc.Instance([("a", "0", "1/3", "1/2", 2), ("b", 5, 5, 6, 6, "2.5")])
    assert len(inst) == 2
    assert inst.ids == ["a", "b"]
    assert inst.rect(0) == ("a", "0", "1/3", "1/2", "2", "1")
    assert inst.rect(1)[5] == "5/2"
    assert not inst.adjacent(0, 1)


def test_errors_are_typed():
    with pytest.raises(rc.ValidationError):
        rc.Instance([("a", 1, 0, 0, 1)])
    with pytest.raises(rc.ParseError):
        rc.loads("{")
    with pytest.raises(rc.PreconditionViolated):
        rc.color(cross_grid(), "corner")
    with pytest.raises(rc.BudgetExceeded):
        rc.exact_mwis(rc.generate("uniform", 30, 1))
    assert issubclass(rc.UnknownId, rc.Error)


def test_round_trip(tmp_path):
    inst = rc.generate("squares", 25, 3, weights="random")
    path = str(tmp_path / "s.json")
    rc.save(inst, path)
    assert rc.dumps(rc.load(path)) == rc.dumps(inst)
    assert rc.dumps(rc.loads(rc.dumps(inst))) == rc.dumps(inst)


def test_cliques():
    grid = cross_grid()
    assert rc.clique_number(grid) == 2
    assert sorted(rc.maximal_cliques(grid)) == [["A", "C"], ["A", "D"], ["B", "C"], ["B", "D"]]


@pytest.mark.parametrize("algo", ["hier", "agb", "sparse"])
def test_colorings_are_proper(algo):
    inst = rc.generate("uniform", 80, 7)
    out = rc.color(inst, algo)
    assert out["algorithm"] == algo
    assert set(out["colors"]) == set(inst.ids)
    assert rc.validate_coloring(inst, out["colors"]) is None


def test_special_colorings():
    vertical = rc.generate("vertical", 40, 2)
    out = rc.color(vertical, "warmup-vertical")
    assert out["num_colors"] <= max(3 * out["omega"] - 2, 1)
    concentric = rc.generate("concentric", 40, 2)
    assert rc.color(concentric, "warmup-cc")["num_colors"] == rc.clique_number(concentric)


def test_validation_reports_pairs():
    grid = cross_grid()
    assert rc.validate_coloring(grid, {i: 0 for i in grid.ids}) in {("A", "C"), ("A", "D"), ("B", "C"), ("B", "D")}
    with pytest.raises(rc.MissingAssignment):
        rc.validate_coloring(grid, {"A": 0})
    assert rc.validate_independent(grid, ["A", "B"]) is None
    assert rc.validate_independent(grid, ["A", "C"]) == ("A", "C")
    with pytest.raises(rc.UnknownId):
        rc.validate_independent(grid, ["nobody"])


def test_mwis():
    inst = rc.generate("uniform", 18, 11, weights="random")
    approx = rc.approximate_mwis(inst)
    ids, opt = rc.exact_mwis(inst)
    assert isinstance(approx["weight"], Fraction)
    assert rc.validate_independent(inst, approx["chosen"]) is None
    assert approx["certified_lower_bound"] <= approx["weight"] <= opt
    assert approx["w_star"] >= opt * Fraction(999999, 1000000)
    assert rc.approximate_mwis(inst) == approx


def test_svg():
    inst = rc.perturb(cross_grid())
    colors = rc.color(inst)["colors"]
    svg = rc.render_svg(inst, colors, ["A"])
    assert svg.count("<rect") == 4
    assert 'id="A"' in svg
