from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import UsageError
from modules.ehrhart.closed_forms import (
    Family,
    binomial,
    boundary_closed_form,
    closed_form_polynomial,
    eval_closed_form,
    parse_family,
)
from modules.ehrhart.interpolation import counts_polynomial, interpolate
from modules.ehrhart.polynomial import EhrhartPolynomial
from modules.ehrhart.reflexivity import canonical_symmetry_check, reflexivity_check
from modules.polytope.h_polytope import HPolytope, Inequality, build_A_star, build_C_star

coefficient_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=6)


def poly(*coefficients):
    return EhrhartPolynomial(tuple(coefficients))


@pytest.mark.parametrize("family, d, k, expected", [
    (Family.A, 1, 1, 3),
    (Family.C, 1, 1, 3),
    (Family.C_STAR, 3, 2, 35),
    (Family.A_STAR, 2, 1, 7),
])
def test_eval_closed_form_examples(family, d, k, expected):
    assert eval_closed_form(family, d, k) == expected


def test_binomial_extends_to_negative_arguments():
    assert binomial(-1, 2) == 1
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(4, -1) == 0


def test_closed_form_needs_positive_dimension():
    with pytest.raises(UsageError):
        eval_closed_form(Family.C_STAR, 0, 1)


@pytest.mark.parametrize("raw, family", [("Cstar", Family.C_STAR), ("a*", Family.A_STAR), (" C ", Family.C)])
def test_parse_family(raw, family):
    assert parse_family(raw) is family


def test_parse_family_rejects_unknown_names():
    with pytest.raises(UsageError):
        parse_family("B")


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("d", range(1, 8))
def test_closed_form_polynomial_matches_evaluator(family, d):
    p = closed_form_polynomial(family, d)
    assert p.degree == d
    for k in range(-3, 6):
        assert p(k) == eval_closed_form(family, d, k)


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("d", range(1, 11))
def test_closed_forms_are_ehrhart_polynomials(family, d):
    assert closed_form_polynomial(family, d).invariant_violations() == []


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("d", range(1, 11))
def test_closed_forms_are_symmetric(family, d):
    assert canonical_symmetry_check(closed_form_polynomial(family, d))


@pytest.mark.parametrize("p, expected", [
    (poly(1, 2, 2), True),
    (poly(1, 2), True),
    (poly(1, 2, 1), False),
])
def test_canonical_symmetry_examples(p, expected):
    assert canonical_symmetry_check(p) is expected


@pytest.mark.parametrize("d", range(1, 11))
@pytest.mark.parametrize("k", range(1, 6))
def test_c_star_telescoping(d, k):
    expected = (k + 1) ** d - (k - 1) ** d
    assert eval_closed_form(Family.C_STAR, d, k) - eval_closed_form(Family.C_STAR, d, k - 1) == expected
    assert boundary_closed_form(Family.C_STAR, d, k) == expected


@pytest.mark.parametrize("d", range(1, 11))
def test_a_star_deformation_identity(d):
    k = EhrhartPolynomial.linear(1, 0)
    assert closed_form_polynomial(Family.A_STAR, d) == (k + 1) ** (d + 1) - k ** (d + 1)


def test_boundary_closed_form_is_zero_at_the_origin():
    assert boundary_closed_form(Family.A, 3, 0) == 0


@pytest.mark.parametrize("nodes, d, expected", [
    ([(0, 1), (1, 5), (2, 13)], 2, poly(1, 2, 2)),
    ([(0, 1), (1, 3)], 1, poly(1, 2)),
    ([(0, 1), (1, 1), (2, 1)], 2, poly(1)),
])
def test_interpolate_examples(nodes, d, expected):
    assert interpolate(nodes, d) == expected


def test_interpolate_rejects_duplicate_nodes():
    with pytest.raises(UsageError):
        interpolate([(0, 1), (0, 1)], 1)


def test_interpolate_needs_d_plus_one_nodes():
    with pytest.raises(UsageError):
        interpolate([(0, 1), (1, 3)], 2)


@given(coefficients=coefficient_lists, nodes=st.lists(st.integers(-10, 10), min_size=6, max_size=6, unique=True))
def test_interpolate_recovers_any_polynomial(coefficients, nodes):
    p = poly(*coefficients)
    assert interpolate([(x, p(x)) for x in nodes], 5) == p


@pytest.mark.parametrize("d", range(1, 6))
def test_counts_recover_c_star_closed_form(d):
    assert counts_polynomial(build_C_star(d)) == closed_form_polynomial(Family.C_STAR, d)


@pytest.mark.parametrize("d", range(1, 6))
def test_counts_recover_a_star_closed_form(d):
    assert counts_polynomial(build_A_star(d)) == closed_form_polynomial(Family.A_STAR, d)


def test_counts_polynomial_with_custom_nodes():
    assert counts_polynomial(build_C_star(2), ks=[1, 3, 4]) == poly(1, 2, 2)


@pytest.mark.parametrize("d", range(1, 5))
def test_reflexivity_holds(d):
    for P in (build_A_star(d), build_C_star(d)):
        verdict = reflexivity_check(P, 4)
        assert verdict.holds
        assert verdict.counterexample is None


def test_reflexivity_rejects_unlabelled_polytopes():
    cube = HPolytope(1, (Inequality((1,), 2), Inequality((-1,), 2)))
    with pytest.raises(UsageError):
        reflexivity_check(cube, 3)


@given(a=coefficient_lists, b=coefficient_lists, k=st.integers(-10, 10))
def test_polynomial_arithmetic_evaluates_pointwise(a, b, k):
    p, q = poly(*a), poly(*b)
    assert (p + q)(k) == p(k) + q(k)
    assert (p - q)(k) == p(k) - q(k)
    assert (p * q)(k) == p(k) * q(k)


@given(a=coefficient_lists)
def test_reflection_is_an_involution(a):
    p = poly(*a)
    assert p.reflect().reflect() == p


def test_polynomial_basics():
    p = poly(1, 2, 2, 0, 0)
    assert p.coefficients == (1, 2, 2)
    assert p.degree == 2
    assert p.leading == 2
    assert p.format_coefficients() == ["1", "2", "2"]
    assert poly(0).degree == -1
    assert poly(Fraction(1, 2)).format_coefficients() == ["1/2"]
    assert poly(1, 2).with_label("x") == poly(1, 2)
