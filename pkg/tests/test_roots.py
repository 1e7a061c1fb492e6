from fractions import Fraction
from math import prod

import pytest

from dunkl.errors import IrrationalCoordinates, NotClosed, UnknownType
from dunkl.roots import (
    alternating_polynomial,
    build_root_system,
    coxeter_matrix,
    degrees_and_checks,
    degrees_only,
    dot,
    parse_type,
    reflect_vector,
)

# fundamental degrees of the finite reflection groups (standard table)
DEGREES = {
    ("A", 1): [2], ("A", 2): [2, 3], ("A", 3): [2, 3, 4], ("A", 4): [2, 3, 4, 5],
    ("B", 2): [2, 4], ("B", 3): [2, 4, 6], ("B", 4): [2, 4, 6, 8],
    ("D", 4): [2, 4, 4, 6], ("G2", None): [2, 6], ("F4", None): [2, 6, 8, 12],
}


@pytest.mark.parametrize("tag,n", list(DEGREES))
def test_order_and_reflection_count(tag, n):
    rs = build_root_system(tag, n)
    degs = DEGREES[(tag, n)]
    info = degrees_and_checks(rs)
    assert sorted(info["degrees"]) == degs
    assert rs.order() == prod(degs)
    assert len(rs.positive) == sum(d - 1 for d in degs)
    assert all(info["checks"].values())


@pytest.mark.parametrize("tag,n", [("A", 3), ("B", 3), ("G2", None), ("I2", 4), ("Z2", 3)])
def test_roots_closed_under_reflections(tag, n):
    rs = build_root_system(tag, n)
    full = set(rs.positive) | {tuple(-x for x in v) for v in rs.positive}
    for v in rs.positive:
        for u in full:
            assert reflect_vector(u, v) in full


def test_classes():
    assert build_root_system("A", 3).num_classes == 1
    b2 = build_root_system("B", 2)
    assert b2.num_classes == 2
    # classes are listed longest first
    long_ = [v for v in b2.positive if b2.class_of[v] == 0]
    assert all(dot(v, v) == 2 for v in long_)
    assert build_root_system("Z2", 3).num_classes == 3
    assert build_root_system("F4").num_classes == 2


def test_dihedral_and_g2_shapes():
    assert build_root_system("I2", 1).positive == ((Fraction(0), Fraction(1)),)
    assert build_root_system("I2", 4).order() == 8
    g2 = build_root_system("G2")
    assert g2.dim == 3 and len(g2.positive) == 6
    assert all(sum(v) == 0 for v in g2.positive)
    with pytest.raises(IrrationalCoordinates):
        build_root_system("I2", 5)
    with pytest.raises(IrrationalCoordinates):
        build_root_system("H3")


def test_degrees_only_for_irrational_types():
    assert degrees_only("H3")["degrees"] == [2, 6, 10]
    assert degrees_only("H4")["order"] == 14400
    assert degrees_only("I2", 5)["degrees"] == [2, 5]


def test_parse_type_and_errors():
    assert parse_type("B3") == ("B", 3)
    assert parse_type("I2(5)") == ("I2", 5)
    with pytest.raises(UnknownType):
        build_root_system("Q", 2)
    with pytest.raises(NotClosed):
        build_root_system(None, roots=[(1, 0), (0, 1)])


def test_coxeter_matrix_b3():
    assert coxeter_matrix(build_root_system("B", 3)) == [[1, 2, 4], [2, 1, 3], [4, 3, 1]]


def test_alternating_polynomial_is_antiinvariant():
    from dunkl.poly import apply_group_element

    rs = build_root_system("B", 2)
    a = alternating_polynomial(rs)
    assert a.degree() == len(rs.positive)
    for w in rs.group():
        assert apply_group_element(w, a) == a.scale(w.determinant())
