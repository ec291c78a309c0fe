import math

import pytest

import pyclifford as cl


def x_small():
    return cl.Multivector.from_terms([[], [1], [2], [2, 3]], [1, 2, 3, 4])


def test_render_and_product():
    x = x_small()
    assert repr(x) == "+ 1 + 2e_1 + 3e_2 + 4e_23"
    assert cl.render(cl.geometric_product(x, x)) == "- 2 + 4e_1 + 6e_2 + 8e_23 + 16e_123"
    z = cl.as_1vector([1, 2, 3, 4, 5, 6, 7])
    assert len(cl.geometric_product(z, x)) == 24


def test_signatures():
    assert cl.Signature(7).q == 0
    assert cl.Signature(7, math.inf).q == math.inf
    assert cl.Signature(1, 1).generator_square(2) == -1
    assert cl.Signature(math.inf, 0) == cl.euclidean()
    e5 = cl.basis(5)
    assert cl.power(e5, 2, cl.grassmann()).is_zero()
    assert cl.power(cl.basis(53), 2, cl.euclidean()).scalar_part() == 1
    assert cl.blade_product([1, 3], [1, 2]) == (1, [2, 3])


def test_high_dimensional_product():
    x = cl.Multivector.from_terms([[1, 2, 3], [1, 5, 7, 8, 10]], [4, -10]) + cl.Multivector.from_scalar(2)
    y = cl.Multivector.from_terms([[1, 2, 3, 7], [1, 5, 6, 8], [1, 4, 6, 7]], [4, 1, -3]) - cl.Multivector.from_scalar(1)
    xy = cl.geometric_product(x, y, cl.Signature(7))
    assert xy.render(basis_sep=",").endswith("- 40e_2,3,5,8,10 - 30e_4,5,6,8,10 + 10e_1,5,7,8,10")


def test_wedge_and_contractions():
    a = cl.Multivector.from_terms([[1, 2, 3], [2, 3, 7]], [3, 4])
    b = cl.Multivector.from_terms([[1, 2, 3], [1, 4, 5], [4, 5, 6]], [1, 2, 3])
    assert cl.render(cl.wedge(a, b)) == "+ 9e_123456 - 8e_123457 - 12e_234567"
    e1, e2 = cl.basis(1), cl.basis(2)
    assert cl.left_contraction(e2, cl.geometric_product(e1, e2)) == -e1
    assert cl.right_contraction(cl.geometric_product(e1, e2), e2) == e1


def test_grades_random_and_round_trips(tmp_path):
    m = cl.random_multivector(dimension=7, max_grade=5, include_fewer=True, seed=2024)
    assert m.grades() == sorted(m.grades())
    assert max(m.grades()) <= 5
    assert cl.parse(cl.render(m)) == m
    assert cl.parse(m.render(basis_sep=","), basis_sep=",") == m
    assert cl.from_mv(cl.to_mv(m)) == m
    path = tmp_path / "m.mv"
    cl.save(m, path)
    assert cl.load(path) == m
    assert m.terms()[0][0] == ()


def test_errors():
    with pytest.raises(cl.ParseError):
        cl.parse("+ 1e_10")
    with pytest.raises(ValueError):
        cl.Multivector.from_terms([[1, 1]], [1])
    with pytest.raises(cl.EvalError):
        cl.Session().run("undefined_name")


def test_session():
    s = cl.Session()
    assert s.run("x = 1 + 2*e_1 + 3*e_2 + 4*e_23") == ("", False)
    assert s.run("x*x")[0] == "- 2 + 4e_1 + 6e_2 + 8e_23 + 16e_123"
    s.run(":signature 1 1")
    assert s.signature == cl.Signature(1, 1)
    assert s.run("e(2)*e(2)")[0] == "scalar ( -1 )"
    assert s.run("e(2) _| e(1) * e(2)")[0] == "+ 1e_1"
    s.run(":signature inf")
    assert s.run("e(2) _| e(1) * e(2)")[0] == "- 1e_1"
    assert "x" in s.variables
    assert s.run(":quit") == ("", True)
