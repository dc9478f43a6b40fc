import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from seidelkit.algebra import (
    FieldSymMatrix,
    IntPoly,
    QuadraticNumber,
    char_poly,
    field_rank,
    isolate_real_roots,
    largest_root,
    psd_status,
    quadratic_form,
    sqrt_rational,
    yun_decomposition,
)

X = sympy.Symbol("x")


def test_quadratic_arithmetic():
    r5 = QuadraticNumber(0, 1, 5)
    assert r5 * r5 == 5
    phi = (1 + r5) / 2
    assert phi * phi == phi + 1
    assert (1 / phi) == phi - 1
    assert r5 > 2 and r5 < Fraction(9, 4)
    assert QuadraticNumber.parse("(-3+sqrt(65))/2") * 2 + 3 == QuadraticNumber(0, 1, 65)
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        QuadraticNumber(0, 1, 5) + QuadraticNumber(0, 1, 65)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=5, max_size=5))
def test_char_poly_matches_sympy(rows):
    n = 5
    m = [[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    ours = char_poly(m).coeffs
    ref = sympy.Matrix(m).charpoly(X).all_coeffs()[::-1]
    assert list(ours) == [int(c) for c in ref]


def test_largest_root_with_rational_root_below():
    # (x-2)(x^3+x^2-9x-1)^2: the rational root 2 is not the largest
    p = IntPoly((-2, -35, -140, 119, 14, -21, 0, 1))
    lr = largest_root(p)
    assert lr.lo < Fraction(26039, 10000) < lr.hi
    assert lr.multiplicity == 2
    assert float(lr.algebraic) == pytest.approx(2.60387547, abs=1e-6)


def test_isolation_and_yun():
    p = IntPoly.from_roots(1, 1, -2, 3)
    roots = isolate_real_roots(p.as_fractions())
    assert [float(r) for r in roots] == pytest.approx([-2, 1, 3])
    dec = yun_decomposition(p.as_fractions())
    assert len(dec) == 2


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=10, max_size=10))
def test_psd_certificate_is_sound(entries):
    n = 4
    it = iter(entries)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    cert = psd_status(FieldSymMatrix(m))
    # PSD iff every principal minor is non-negative
    sm = sympy.Matrix(m)
    is_psd = all(sm.extract(list(c), list(c)).det() >= 0
                 for k in range(1, n + 1) for c in itertools.combinations(range(n), k))
    assert cert.psd == is_psd
    if cert.psd:
        assert cert.rank == field_rank(m)
    else:
        assert quadratic_form(m, cert.witness) < 0


def test_psd_over_quadratic_field():
    r5 = QuadraticNumber(0, 1, 5)
    m = FieldSymMatrix([[r5, 1], [1, r5]])
    assert psd_status(m).psd and psd_status(m).rank == 2
    m = FieldSymMatrix([[1, r5], [r5, 1]])
    assert not psd_status(m).psd
