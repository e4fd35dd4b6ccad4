"""Smoke test for the strata extension module.

Build and install first:  pip install -e crates/py --no-build-isolation
"""

import strata


def main():
    square = strata.PointSet([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
    assert len(square) == 5
    assert square.depths() == [1, 1, 1, 1, 2]
    assert square.convex_depths() == [1, 1, 1, 1, 2]
    assert square.tukey_depth((2, 2))[0] == 2
    assert square.query_depth((2, 1)) == 2
    assert square.query_depth((9, 9)) == 1

    t = square.triangulate()
    assert sorted(t.hull()) == [0, 1, 2, 3]
    assert len(t.triangles()) == 4
    assert t.set_depth() == 2
    assert [layer.vertices for layer in t.layers()] == [[0, 1, 2, 3], [4]]

    gadget = strata.element_uniqueness_gadget([1.0, 2.0, 3.0, 2.0])
    assert gadget.query_depth((0, 0)) == 4

    nested, p = strata.nested_triangle_gadget(6)
    delta = nested.depth_change(p)
    assert (delta.set_depth_before, delta.set_depth_after) == (6, 3)

    s = strata.uniform_points(300, 1)
    levels = s.level_set()
    assert levels.level_count() >= levels.depth_of_set
    for q in [(0.5, 0.5), (0.2, 0.7), (0.9, 0.1)]:
        if levels.boundary_distance(q) > 1e-6:
            assert levels.classify(q) == s.query_depth(q), q
    assert levels.contours()[0][0] == 1
    assert levels.medians()

    try:
        strata.PointSet([(0, 0), (0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate points accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
