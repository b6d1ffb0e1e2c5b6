"""Smoke test for the pyhypercount extension module.

Run after `maturin develop` (or installing the built wheel):

    python python/smoke_test.py
"""

from fractions import Fraction

import pyhypercount as hc


def main() -> None:
    mult = hc.construct("mult_construction", [2, 3])
    assert len(mult) == 6
    assert mult.plane == "dual"
    assert mult.count_pairs_at(1, 0) == 9
    assert mult.distinct_distances() == 2
    assert mult.distinct_distances(include_zero=False) == 1
    report = mult.analyze()
    assert report["multiplicity"] == 3 and report["secondary_multiplicity"] == 3
    assert mult.dyadic_classify() == {(1, 1, 1, 1): 18}
    assert mult.histogram() == {(Fraction(0), Fraction(0)): 6, (Fraction(1), Fraction(0)): 9}

    sheared = mult.transform("shear_dual", Fraction(-1, 2))
    assert sheared.count_pairs_at(1, 1) == 9
    assert sheared.analyze()["multiplicity"] == 3

    text = mult.serialize()
    assert hc.PointSet.parse(text) == mult

    pts = hc.PointSet("dual", [("1/2", 0, 3, 4), (Fraction(1, 2), 0, 3, 4)])
    assert len(pts) == 1 and pts.collapsed == 1
    assert pts.points() == [(Fraction(1, 2), Fraction(0), Fraction(3), Fraction(4))]

    assert hc.construct("lenz", [3, 2]).count_pairs_at(1, 1) == 6
    grid = hc.construct("integer_grid", [3])
    assert len(grid.rich_lines(3)) == 8
    assert hc.construct("grid_product", [], [grid]).distinct_distances(include_zero=False) == 35
    circle = hc.construct("rational_circle_points", [3])
    prod = hc.construct("typeB_product", inputs=[grid, circle])
    assert prod.analyze()["real_multiplicity"] == 3

    assert hc.rho_dual([1, 1, 0, 0], [0, 0, 0, 0]) == (Fraction(1), Fraction(2))
    assert hc.rho_double([1, 0, 0, 0], [0, 0, 0, 1]) == (Fraction(1), Fraction(1))

    rows = hc.run_experiment("lenz", [[k, k] for k in range(1, 6)], "repeated-count", at="1,1")
    assert [r[1] for r in rows] == [1, 4, 9, 16, 25]
    assert abs(hc.fit_exponent([(n, n ** 3) for n in (2, 4, 8, 16)]) - 3.0) < 1e-9
    assert "mult_construction" in hc.constructions()
    assert "shear_dual" in hc.transforms()

    for bad in (
        lambda: hc.PointSet("dual", [(1, 2)]),
        lambda: mult.count_pairs_at(0, 1),
        lambda: mult.transform("imaginary_scale_dual", 0),
        lambda: hc.construct("nope", [1]),
        lambda: hc.fit_exponent([(1, 1), (2, 2)]),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("pyhypercount smoke test passed")


if __name__ == "__main__":
    main()
