import random

import pytest

from tsrforge.errors import BadDegree, ZeroConstantTerm
from tsrforge.factorint import euler_phi
from tsrforge.fields import make_field, subfield_maps
from tsrforge.polys import Polynomial, format_poly, parse_poly, poly_divrem
from tsrforge.primitivity import (conjugate_product, is_irreducible,
                                  is_primitive_element, is_primitive_poly,
                                  minimal_polynomial)


def test_irreducibility_known():
    f2 = make_field(2)
    assert is_irreducible(parse_poly("x^2 + x + 1", f2))
    assert not is_irreducible(parse_poly("x^2 + 1", f2))          # (x+1)^2
    assert is_irreducible(parse_poly("x^5 + x^2 + 1", f2))
    assert not is_irreducible(parse_poly("x^4 + x^2 + 1", f2))    # (x^2+x+1)^2
    f3 = make_field(3)
    assert is_irreducible(parse_poly("x^3 + 2x + 1", f3))
    assert not is_irreducible(parse_poly("x^3 + 2x", f3))


def test_irreducible_census_degree_4_over_f2():
    # (1/4) sum mu(d) 2^(4/d) = (16 - 4) / 4 = 3
    f2 = make_field(2)
    hits = []
    for v in range(16):
        coeffs = [f2.element((v >> i) & 1) for i in range(4)] + [f2.one()]
        p = Polynomial.make(f2, coeffs)
        if is_irreducible(p):
            hits.append(format_poly(p))
    assert hits == ["x^4 + x + 1", "x^4 + x^3 + 1", "x^4 + x^3 + x^2 + x + 1"]


def test_primitive_known_pairs():
    f2 = make_field(2)
    ok, cert = is_primitive_poly(parse_poly("x^4 + x + 1", f2))
    assert ok and cert.group_order == 15
    assert cert.factors.as_dict() == {3: 1, 5: 1}
    # irreducible of order 5 < 15
    ok, cert = is_primitive_poly(parse_poly("x^4 + x^3 + x^2 + x + 1", f2))
    assert not ok and cert is None
    # reducible
    assert is_primitive_poly(parse_poly("x^2 + 1", f2)) == (False, None)


def test_primitive_census_matches_phi():
    # #primitive monic of degree n over F_q is phi(q^n - 1) / n
    for q, n in ((2, 4), (3, 2), (5, 2), (4, 2)):
        field = make_field(q)
        count = 0
        for v in range(q ** n):
            coeffs = []
            t = v
            for _ in range(n):
                coeffs.append(field.element(t % q))
                t //= q
            p = Polynomial.make(field, coeffs + [field.one()])
            if not p.constant_term.is_zero() and is_primitive_poly(p)[0]:
                count += 1
        assert count == euler_phi(q ** n - 1) // n, (q, n)


def test_primitivity_scale_invariant():
    # primitivity is a property of the root set, so scaling cannot change it
    f5 = make_field(5)
    rng = random.Random(53)
    for _ in range(20):
        coeffs = [f5.element(rng.randrange(5)) for _ in range(3)] + [f5.one()]
        p = Polynomial.make(f5, coeffs)
        if p.constant_term.is_zero():
            continue
        verdict = is_primitive_poly(p)[0]
        for c in (2, 3, 4):
            assert is_primitive_poly(p.scale(f5.element(c)))[0] == verdict


def test_primitive_rejects_degenerate():
    f2 = make_field(2)
    with pytest.raises(ZeroConstantTerm):
        is_primitive_poly(parse_poly("x^2 + x", f2))
    with pytest.raises(BadDegree):
        is_primitive_poly(Polynomial.one(f2))


def test_certificate_witnesses():
    f2 = make_field(2)
    ok, cert = is_primitive_poly(parse_poly("x^6 + x + 1", f2))
    assert ok and cert.group_order == 63
    assert cert.factors.primes == (3, 7)
    # each witness is x^((q^n-1)/l) mod f and must differ from 1
    one = Polynomial.one(f2)
    for l, w in cert.witnesses:
        assert cert.group_order % l == 0
        assert w != one


def test_primitive_element_counts():
    for q in (9, 16, 25):
        field = make_field(q)
        count = sum(1 for x in field.elements()
                    if not x.is_zero() and is_primitive_element(x))
        assert count == euler_phi(q - 1), q


def test_minimal_polynomial_properties():
    big = make_field(64)
    g = big.gen()
    mp = minimal_polynomial(g, 2)
    assert mp.field.order == 2 and mp.degree == 6
    assert is_primitive_poly(mp)[0]
    # beta and beta^4 share a minimal polynomial over F_4, conjugates under x -> x^4
    mp4 = minimal_polynomial(g, 4)
    assert mp4.field.order == 4 and mp4.degree == 3
    assert minimal_polynomial(g ** 4, 4) == mp4
    # element of the base field has degree-1 minimal polynomial
    base, embed, _ = subfield_maps(big, 4)
    mp1 = minimal_polynomial(embed(base.gen()), 4)
    assert mp1.degree == 1


def test_minimal_polynomial_annihilates():
    big = make_field(81)
    rng = random.Random(59)
    _, embed, _ = subfield_maps(big, 3)
    for _ in range(10):
        x = big.element(rng.randrange(1, 81))
        mp = minimal_polynomial(x, 3)
        lifted = Polynomial.make(big, [embed(c) for c in mp.coeffs])
        val = sum((lifted.coeff(i) * x ** i for i in range(1, mp.degree + 1)),
                  lifted.coeff(0) * big.one())
        assert val.is_zero()


def test_conjugate_product_descends_and_divides():
    rng = random.Random(61)
    for q, base_q in ((9, 3), (4, 2), (25, 5)):
        big = make_field(q)
        for _ in range(10):
            coeffs = [big.element(rng.randrange(q)) for _ in range(2)] + [big.one()]
            p = Polynomial.make(big, coeffs)
            down = conjugate_product(p, base_q)
            assert down.field.order == base_q
            assert down.degree == p.degree * 2
            _, embed, _ = subfield_maps(big, base_q)
            lifted = Polynomial.make(big, [embed(c) for c in down.coeffs])
            _, rem = poly_divrem(lifted, p)
            assert rem.is_zero()


def test_conjugate_product_of_descended_is_power():
    # input already over the base: the product is just p^j
    big = make_field(9)
    _, embed, _ = subfield_maps(big, 3)
    f3 = make_field(3)
    p3 = parse_poly("x^2 + 1", f3)
    lifted = Polynomial.make(big, [embed(c) for c in p3.coeffs])
    assert conjugate_product(lifted, 3) == p3 * p3
