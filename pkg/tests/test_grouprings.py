"""Ring arithmetic, ideals, annihilators, and principality in F2[x,y]/(x^l-1, y^m-1)."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bbfold.f2la import BitMatrix
from bbfold.grouprings import (
    Ideal, RingAutomorphism, RingElem, RingParams, annihilator,
    annihilator_of_ideal, apply_automorphism, elem, elem_times_ideal,
    find_principal_generator, format_elem, ideal_generated, ideal_product,
    is_principal, mul_matrix, parse_elem, quotient_dim,
    quotient_dim_by_elems, semisimple_decomposition,
)

P77 = RingParams(7, 7)
C98 = parse_elem(P77, "x + y^3 + y^4")
D98 = parse_elem(P77, "y + x^3 + x^4")


@st.composite
def ring_elems(draw, max_side=6):
    ell = draw(st.integers(1, max_side))
    m = draw(st.integers(1, max_side))
    params = RingParams(ell, m)
    bits = draw(st.lists(st.integers(0, 1), min_size=ell * m, max_size=ell * m))
    return RingElem(params, np.array(bits, dtype=np.uint8).reshape(ell, m))


def test_elem_examples():
    assert elem(P77, [(1, 0), (0, 3), (0, 4)]) == C98
    assert elem(P77, []).is_zero()
    assert elem(P77, [(0, 0), (0, 0)]).is_zero()  # 1 + 1 = 0


def test_mul_frobenius_and_identity():
    params = RingParams(5, 1)
    one_plus_x = parse_elem(params, "1 + x")
    assert one_plus_x * one_plus_x == parse_elem(params, "1 + x^2")
    assert C98 * RingElem.one(P77) == C98


def test_mul_commutes_for_the_7x7_pair():
    assert C98 * D98 == D98 * C98


def test_mul_matrix_of_one_is_identity():
    assert mul_matrix(RingElem.one(RingParams(3, 4))) == BitMatrix.identity(12)


def test_mul_matrix_of_x_is_the_cyclic_shift():
    params = RingParams(3, 1)
    m = mul_matrix(parse_elem(params, "x")).to_dense()
    # column j carries x * x^j = x^(j+1)
    expected = np.zeros((3, 3), dtype=np.uint8)
    for j in range(3):
        expected[(j + 1) % 3, j] = 1
    assert np.array_equal(m, expected)


def test_mul_matrix_agrees_with_convolution():
    rng = np.random.default_rng(10)
    params = RingParams(4, 5)
    for _ in range(100):
        a = RingElem(params, rng.integers(0, 2, (4, 5)).astype(np.uint8))
        b = RingElem(params, rng.integers(0, 2, (4, 5)).astype(np.uint8))
        assert mul_matrix(a).mul_vec(b.vec()) == (a * b).vec()


@st.composite
def ring_elem_pairs(draw, max_side=4):
    ell = draw(st.integers(1, max_side))
    m = draw(st.integers(1, max_side))
    params = RingParams(ell, m)
    grids = [draw(st.lists(st.integers(0, 1), min_size=ell * m, max_size=ell * m))
             for _ in range(2)]
    return tuple(RingElem(params, np.array(g, dtype=np.uint8).reshape(ell, m))
                 for g in grids)


@settings(max_examples=40, deadline=None)
@given(ring_elem_pairs())
def test_mul_matrix_is_a_ring_homomorphism(pair):
    a, b = pair
    assert mul_matrix(a) @ mul_matrix(b) == mul_matrix(a * b)


@settings(max_examples=40, deadline=None)
@given(ring_elems(max_side=5))
def test_antipode_transposes_multiplication(a):
    assert mul_matrix(a.antipode()) == mul_matrix(a).transpose()


def test_automorphism_examples():
    assert apply_automorphism(RingAutomorphism.iota(), parse_elem(P77, "x")) \
        == parse_elem(P77, "x^6")
    assert apply_automorphism(RingAutomorphism.omega(), C98) == D98
    with pytest.raises(ValueError):
        parse_elem(RingParams(2, 3), "x").swap_xy()


@settings(max_examples=40, deadline=None)
@given(ring_elems())
def test_antipode_is_an_involution(a):
    assert a.antipode().antipode() == a


def test_parse_and_format_roundtrip():
    rng = np.random.default_rng(11)
    params = RingParams(5, 6)
    for _ in range(50):
        a = RingElem(params, rng.integers(0, 2, (5, 6)).astype(np.uint8))
        assert parse_elem(params, format_elem(a)) == a


def test_parse_accepts_variants_and_rejects_garbage():
    assert parse_elem(P77, "y^3+ x +y^4") == C98
    assert parse_elem(P77, "x*y^0 + y^3 + y^4") == C98
    assert parse_elem(P77, "x^-6 + y^3 + y^4") == C98
    with pytest.raises(ValueError, match="z"):
        parse_elem(P77, "x + z^2")
    with pytest.raises(ValueError, match="exponent"):
        parse_elem(P77, "x^")


def naive_shift_span_dim(g: RingElem) -> int:
    rows = []
    for a in range(g.params.ell):
        for b in range(g.params.m):
            rows.append(g.shift(a, b).vec().to_bits().tolist())
    # plain elimination over Python lists
    r = 0
    cols = len(rows[0])
    for j in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][j]:
                rows[i] = [(u + v) % 2 for u, v in zip(rows[i], rows[r])]
        r += 1
    return r


def test_ideal_generated_basics():
    params = RingParams(3, 3)
    assert ideal_generated([], params=params).dim == 0
    assert ideal_generated([RingElem.one(params)]).dim == 9
    gen = parse_elem(params, "1 + x")
    ideal = ideal_generated([gen])
    assert ideal.dim == naive_shift_span_dim(gen) == 6


@settings(max_examples=30, deadline=None)
@given(ring_elems(max_side=5))
def test_ideals_are_closed_under_shifts(a):
    assert ideal_generated([a]).is_shift_closed()
    assert annihilator(a).is_shift_closed()


def test_annihilator_extremes():
    params = RingParams(4, 3)
    assert annihilator(RingElem.zero(params)).dim == 12
    assert annihilator(RingElem.one(params)).dim == 0


def test_annihilator_of_the_7x7_polynomial_is_principal():
    ann = annihilator(C98)
    gen = find_principal_generator(ann)
    assert gen is not None
    assert ideal_generated([gen]) == ann


def test_ideal_product_units_and_zero():
    params = RingParams(4, 4)
    rng = np.random.default_rng(12)
    ideal = ideal_generated(
        [RingElem(params, rng.integers(0, 2, (4, 4)).astype(np.uint8))])
    one = ideal_generated([RingElem.one(params)])
    zero = ideal_generated([], params=params)
    assert ideal_product(ideal, one) == ideal
    assert ideal_product(ideal, zero).dim == 0


def test_product_of_principal_ideals():
    params = RingParams(5, 5)
    rng = np.random.default_rng(13)
    for _ in range(10):
        c = RingElem(params, rng.integers(0, 2, (5, 5)).astype(np.uint8))
        d = RingElem(params, rng.integers(0, 2, (5, 5)).astype(np.uint8))
        lhs = ideal_product(ideal_generated([c]), ideal_generated([d]))
        rhs = ideal_generated([c * d])
        assert lhs == rhs


def test_elem_times_ideal_is_the_ideal_product():
    params = RingParams(4, 5)
    rng = np.random.default_rng(14)
    for _ in range(10):
        a = RingElem(params, rng.integers(0, 2, (4, 5)).astype(np.uint8))
        b = RingElem(params, rng.integers(0, 2, (4, 5)).astype(np.uint8))
        ideal = annihilator(b)
        assert elem_times_ideal(a, ideal) == ideal_product(ideal_generated([a]), ideal)


def test_quotient_dims_of_reference_pairs():
    assert quotient_dim_by_elems([C98, D98]) == 3
    params = RingParams(9, 9)
    c = parse_elem(params, "x^3 + y + y^2")
    d = parse_elem(params, "y^3 + x + x^2")
    assert quotient_dim_by_elems([c, d]) == 4
    assert quotient_dim(ideal_generated([RingElem.one(params)])) == 0


def test_double_annihilator_on_odd_grids():
    rng = np.random.default_rng(15)
    for params in (RingParams(3, 3), RingParams(5, 3), RingParams(7, 1)):
        for _ in range(5):
            a = RingElem(params, rng.integers(0, 2, (params.ell, params.m))
                         .astype(np.uint8))
            double = annihilator_of_ideal(annihilator(a))
            assert double == ideal_generated([a])


def test_find_principal_generator_zero_ideal():
    params = RingParams(3, 4)
    gen = find_principal_generator(ideal_generated([], params=params))
    assert gen is not None and gen.is_zero()


def exhaustive_generator_exists(ideal: Ideal) -> bool:
    if ideal.dim == 0:
        return True  # generated by the zero element
    for mask in range(1, 1 << ideal.dim):
        coords = [(mask >> t) & 1 for t in range(ideal.dim)]
        v = ideal.space.vector_from_coordinates(coords)
        if ideal_generated([RingElem.from_vec(ideal.params, v)]) == ideal:
            return True
    return False


def test_two_generator_ideal_certified_absent():
    # (x+1, y+1) is the maximal ideal of a local ring at 2x2: not principal
    for ell, m in [(2, 2), (4, 2), (2, 6)]:
        params = RingParams(ell, m)
        ideal = ideal_generated([parse_elem(params, "1 + x"),
                                 parse_elem(params, "1 + y")])
        assert find_principal_generator(ideal) is None
        assert not exhaustive_generator_exists(ideal)


def test_certified_principality_matches_exhaustive_oracle():
    rng = np.random.default_rng(16)
    checked = 0
    for _ in range(40):
        ell = int(rng.integers(2, 5))
        m = int(rng.integers(2, 4))
        params = RingParams(ell, m)
        gens = [RingElem(params, rng.integers(0, 2, (ell, m)).astype(np.uint8))
                for _ in range(int(rng.integers(1, 3)))]
        ideal = ideal_generated(gens, params=params)
        if ideal.dim > 10:
            continue
        checked += 1
        assert is_principal(ideal) == exhaustive_generator_exists(ideal)
    assert checked >= 10


def test_witness_generates_the_ideal():
    rng = np.random.default_rng(17)
    for _ in range(15):
        ell = int(rng.integers(2, 6))
        m = int(rng.integers(2, 6))
        params = RingParams(ell, m)
        a = RingElem(params, rng.integers(0, 2, (ell, m)).astype(np.uint8))
        ideal = ideal_generated([a])
        gen = find_principal_generator(ideal)
        assert gen is not None
        assert ideal_generated([gen]) == ideal


def test_semisimple_decomposition_examples():
    assert semisimple_decomposition(RingParams(1, 1)) == [1]
    # x^3 - 1 = (x + 1)(x^2 + x + 1) over F2; tensoring the two field columns
    degrees = semisimple_decomposition(RingParams(3, 3))
    assert degrees == [1, 2, 2, 2, 2]
    assert degrees.count(1) == 1  # only the trivial character is F2-rational
    degrees77 = semisimple_decomposition(P77)
    assert sum(degrees77) == 49
    with pytest.raises(ValueError):
        semisimple_decomposition(RingParams(2, 3))


def test_odd_grid_ideals_are_always_principal():
    # over a product of fields every ideal is principal; the certified
    # test and the witness search must agree with that
    rng = np.random.default_rng(28)
    for _ in range(15):
        ell = int(rng.choice([1, 3, 5, 7]))
        m = int(rng.choice([1, 3, 5]))
        params = RingParams(ell, m)
        gens = [RingElem(params, rng.integers(0, 2, (ell, m)).astype(np.uint8))
                for _ in range(int(rng.integers(1, 4)))]
        ideal = ideal_generated(gens, params=params)
        assert is_principal(ideal)
        gen = find_principal_generator(ideal)
        assert gen is not None and ideal_generated([gen], params=params) == ideal


def test_parser_accepts_reversed_variable_order():
    assert parse_elem(P77, "y^3x^2") == parse_elem(P77, "x^2*y^3")
    assert parse_elem(P77, "y x") == parse_elem(P77, "x*y")


def test_annihilator_of_zero_ideal_is_everything():
    params = RingParams(3, 4)
    zero_ideal = ideal_generated([], params=params)
    assert annihilator_of_ideal(zero_ideal).dim == params.dim
