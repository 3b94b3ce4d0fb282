import pytest
from hypothesis import given
from hypothesis import strategies as st

from charpreg import (Ideal, PolynomialRing, bracket_power, buchberger, colon,
                      dehomogenize, homogenize, ideal_membership, intersect, normal_form,
                      quotient_by_element, s_polynomial)
from charpreg.determinantal import determinantal_family
from charpreg.groebner import (GUARD_ENV, DegreeGuardError, degree_cap_for, divide_exact,
                               division, lead_term_ideal)

from conftest import polys
from oracles import GradedSpan, colon_dim, monomials, quotient_dim_by_leads

R3 = PolynomialRing(3, "xyz")
K2 = PolynomialRing(2, "xy")


def is_groebner(G):
    return all(normal_form(s_polynomial(f, g), G).is_zero()
               for i, f in enumerate(G) for g in G[i + 1:])


def is_reduced(G):
    for i, g in enumerate(G):
        if g.lead_coeff != 1:
            return False
        others = [h.lead_exp for j, h in enumerate(G) if j != i]
        for e, _ in g.items():
            if any(all(a <= b for a, b in zip(l, e)) for l in others):
                return False
    return True


def test_normal_form_examples():
    x, y, z = R3.gens()
    g = x * y - z ** 2
    assert normal_form(g, [g]).is_zero()
    assert normal_form(x ** 2, [x]).is_zero()
    assert normal_form(y, [x]) == y


def test_normal_form_remainder_property():
    x, y, z = R3.gens()
    G = [x * y - z, y ** 2 - x]
    f = x ** 3 * y + y ** 3 + z
    r = normal_form(f, G)
    leads = [g.lead_exp for g in G]
    assert not any(all(a <= b for a, b in zip(l, e)) for e, _ in r.items() for l in leads)
    assert Ideal(G).contains(f - r)


def test_division_certificate():
    x, y, z = R3.gens()
    G = [x * y - z, y ** 2 - x]
    f = x ** 3 * y + y ** 3 + z
    qs, r = division(f, G)
    assert sum((q * g for q, g in zip(qs, G)), r) == f
    assert divide_exact(G[0] * G[1], G[1]) == G[0]
    with pytest.raises(ArithmeticError):
        divide_exact(x, y)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_h1_lies_in_ideal_of_h0_and_g1(p, e):
    fam = determinantal_family(p, e)
    q = fam.q
    z, u = fam.ring.gen("z"), fam.ring.gen("u")
    y = fam.ring.gen("y")
    assert fam.h[1] == y * fam.h[0] - z ** q * u ** (q - 1) * fam.g1
    assert normal_form(fam.h[1], buchberger([fam.h[0], fam.g1])).is_zero()
    # {h_0, g_1} alone is not a Groebner basis: h_1 is its S-polynomial and
    # has a lead term neither lead divides, which is why it joins G
    assert normal_form(fam.h[1], [fam.h[0], fam.g1]) == fam.h[1]
    assert s_polynomial(fam.h[0], fam.g1) == fam.h[1]


def test_buchberger_examples():
    x, y, z = R3.gens()
    assert buchberger([x]) == [x]
    lex = PolynomialRing(3, "xyz", "lex")
    a, b, c = lex.gens()
    G = buchberger([a - b, b - c])
    assert set(G) == {a - c, b - c}
    assert all(normal_form(f, [a - b, b - c]).is_zero() for f in G)
    assert all(normal_form(f, G).is_zero() for f in [a - b, b - c])


def test_buchberger_rejects_zero_input():
    with pytest.raises(ValueError):
        buchberger([R3.zero()])


def test_gb_sorted_by_lead():
    fam = determinantal_family(2, 1)
    G = fam.ideal.gb()
    keys = [fam.ring.order.sortkey(g.lead_exp) for g in G]
    assert keys == sorted(keys, reverse=True)


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (3, 1)])
def test_determinantal_gb_matches_G(p, e):
    fam = determinantal_family(p, e)
    B = fam.ideal.gb()
    assert is_groebner(B) and is_reduced(B)
    G = fam.G
    assert is_groebner(G)

    def minimal_leads(gs):
        ls = {g.lead_exp for g in gs}
        return {l for l in ls
                if not any(m != l and all(a <= b for a, b in zip(m, l)) for m in ls)}

    assert minimal_leads(B) == minimal_leads(G)
    assert all(normal_form(g, B).is_zero() for g in G)
    assert all(normal_form(b, G).is_zero() for b in B)


@given(data=st.data())
def test_random_gb_is_groebner_and_generates(data):
    gens = [f for f in data.draw(st.lists(polys(R3, 3, 2), min_size=1, max_size=3)) if f]
    if not gens:
        return
    G = buchberger(gens)
    assert is_groebner(G) and is_reduced(G)
    assert all(normal_form(f, G).is_zero() for f in gens)
    assert all(normal_form(g, gens if is_groebner(gens) else G).is_zero() for g in G)
    # mutual containment through a fresh GB of the basis itself
    assert Ideal(G) == Ideal(gens)


def test_membership_examples(det2):
    R, I = det2
    assert ideal_membership(I.generators[0], I)
    fam = determinantal_family(2, 1)
    xq = fam.ring.gen("x") ** fam.q
    assert ideal_membership(xq * fam.g3q, fam.ideal)
    assert xq * fam.g3q == fam.h[fam.q]
    x, y = K2.gens()
    assert not ideal_membership(K2.one(), Ideal([x, y]))
    with pytest.raises(ValueError):
        ideal_membership(R3.gen(0), Ideal([x]))


def test_bracket_power_examples(det2):
    R, I = det2
    assert bracket_power(I, 0) is I
    J = bracket_power(I, 1)
    assert list(J.generators) == [g * g for g in I.generators]
    assert J.homogeneous
    fam = determinantal_family(2, 1)
    assert bracket_power(I, 1) + fam.g1 == fam.ideal


def test_colon_trivial_cases(det2):
    R, I = det2
    assert colon(I, Ideal.unit(R)) == I
    assert colon(I, I).is_unit()
    with pytest.raises(ValueError):
        colon(I, Ideal([], R))


def test_colon_monomial_example():
    x, y = K2.gens()
    assert colon(Ideal([x ** 2, x * y]), Ideal([x])) == Ideal([x, y])


def test_colon_frobenius_contains_bracket_power(det2):
    R, I = det2
    Iq = bracket_power(I, 1)
    C = colon(Iq, I)
    assert C.contains_ideal(Iq)
    for r in C.gb():
        assert r.is_homogeneous()
        for f in I.generators:
            assert Iq.contains(r * f)


def test_quotient_by_element_and_intersect():
    x, y, z = R3.gens()
    I = Ideal([x * y, x * z])
    assert quotient_by_element(I, x) == Ideal([y, z])
    assert quotient_by_element(I, R3.zero()).is_unit()
    assert intersect(Ideal([x]), Ideal([y])) == Ideal([x * y])
    assert intersect(Ideal([x, y]), Ideal([y, z]), Ideal([x, z])) == Ideal([x * y, x * z, y * z])


def _random_homogeneous_ideal(draw, ring, max_gens=3, max_deg=3):
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        d = draw(st.integers(1, max_deg))
        mons = monomials(ring.nvars, d)
        chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True))
        f = ring.zero()
        for m in chosen:
            f = f + ring.monomial(m, draw(st.integers(1, ring.p - 1)))
        gens.append(f)
    return Ideal(gens, ring)


@pytest.mark.parametrize("ring", [PolynomialRing(2, "xy"), PolynomialRing(3, "xy")])
@given(data=st.data())
def test_colon_brute_force_two_variables(ring, data):
    I = _random_homogeneous_ideal(data.draw, ring)
    J = _random_homogeneous_ideal(data.draw, ring, 2, 2)
    if data.draw(st.booleans()):
        I = bracket_power(I, 1)
    C = colon(I, J)
    D = max(I.max_degree(), J.max_degree()) + 2
    if C.is_unit():
        assert all(colon_dim(I.generators, J.generators, ring, d) == d + 1
                   for d in range(D + 1))
        return
    leads = lead_term_ideal(C)
    span_I = GradedSpan(I.generators, ring)
    for d in range(D + 1):
        expected = colon_dim(I.generators, J.generators, ring, d)
        got = len(monomials(ring.nvars, d)) - quotient_dim_by_leads(leads, ring.nvars, d)
        assert got == expected, d
        for m in monomials(ring.nvars, d):
            mono = ring.monomial(m)
            brute = all(span_I.contains(mono * f) for f in J.generators)
            assert brute == C.contains(mono)


@given(data=st.data())
def test_colon_certificate_and_containment(data):
    I = _random_homogeneous_ideal(data.draw, R3, 3, 2)
    J = _random_homogeneous_ideal(data.draw, R3, 2, 2)
    C = colon(I, J)
    assert C.contains_ideal(I)
    for r in C.gb():
        assert r.is_homogeneous()
        assert all(I.contains(r * f) for f in J.generators)


def test_homogenize_examples():
    x, y, z = R3.gens()
    H = homogenize(Ideal([x * y - z ** 2]))
    assert H.ring.variables == ("x", "y", "z", "Z")
    assert str(H.generators[0]) == "x*y - z^2"
    K = PolynomialRing(5, "xy")
    a, b = K.gens()
    H = homogenize(Ideal([a ** 2 + b, a ** 3 + a * b]))
    assert [str(g) for g in H.generators] == ["x^2 + y*Z", "x^3 + x*y*Z"]
    assert dehomogenize(H) == Ideal([a ** 2 + b, a ** 3 + a * b])
    assert dehomogenize(H).generators[0] == a ** 2 + b
    with pytest.raises(ValueError):
        homogenize(Ideal([a]), "x")


def test_homogenize_via_gb_gives_ideal_homogenization():
    K = PolynomialRing(7, "xy")
    x, y = K.gens()
    I = Ideal([x ** 2 - y, x * y - 1])
    naive = homogenize(I)
    full = homogenize(I, via_gb=True)
    assert full.contains_ideal(naive) and not naive.contains_ideal(full)
    assert dehomogenize(full) == I


def test_degree_guard(monkeypatch):
    fam = determinantal_family(2, 2)
    with pytest.raises(DegreeGuardError) as ei:
        buchberger(fam.ideal.generators, degree_cap=9)
    assert ei.value.cap == 9 and ei.value.degree > 9
    monkeypatch.setenv(GUARD_ENV, "5")
    assert degree_cap_for(3) == 5
    with pytest.raises(DegreeGuardError):
        Ideal(fam.ideal.generators).gb()
    monkeypatch.delenv(GUARD_ENV)
    assert degree_cap_for(3) == 24 and degree_cap_for(3, 7) == 7
