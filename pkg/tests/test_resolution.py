import pytest
from hypothesis import given
from hypothesis import strategies as st

from charpreg import (BettiTable, FreeVector, GradedFreeModule, GradedMap, Ideal,
                      PolynomialRing, Resolution, free_resolution, minimal_generator_degrees,
                      minimalize, module_gb, regularity, resolve_quotient, syzygies)
from charpreg.determinantal import determinantal_family, g_syzygy_generators
from charpreg.groebner import lead_term_ideal
from charpreg.resolution import (hilbert_function_by_counting, hilbert_function_from_betti,
                                 ideal_regularity, quotient_presentation, quotient_regularity)
from charpreg.ringcore import NEG_INF

from oracles import image_dim, kernel_dim, monomials, quotient_dim_by_leads

K2 = PolynomialRing(2, "xy")
K3 = PolynomialRing(3, "xyz")
L3 = PolynomialRing(3, "xyz", "lex")


def fv(ring, coords, twists=None):
    return FreeVector([ring(c) if isinstance(c, str) else c for c in coords],
                      GradedFreeModule(twists or [0] * len(coords)))


def assert_exact(res, upto=None):
    """ker d_i = im d_{i+1} degree by degree, by linear algebra."""
    maps = res.maps
    top = upto if upto is not None else max(
        (max(m.source.twists) for m in maps if m.source.rank), default=0) + 2
    for a, b in zip(maps, maps[1:]):
        for t in range(top + 1):
            assert kernel_dim(a, t) == image_dim(b, t), t
    if maps:
        for t in range(top + 1):
            assert kernel_dim(maps[-1], t) == 0


def assert_hilbert_consistent(I, res):
    reg = res.betti().regularity()
    leads = lead_term_ideal(I) if not I.is_zero() else []
    n = I.ring.nvars
    for d in range(max(3 * reg, 3) + 1):
        assert hilbert_function_from_betti(res.betti(), n, d) == \
            quotient_dim_by_leads(leads, n, d)


# --- module GBs -------------------------------------------------------------

def test_module_gb_single_column_is_monic():
    v = fv(K3, ["2*x", "y"])
    (g,) = module_gb([v])
    assert g == fv(K3, ["x", "2*y"])


def test_module_gb_disjoint_positions():
    a, b = fv(K2, ["x", "0"]), fv(K2, ["0", "x"])
    assert set(map(tuple, (g.coordinates for g in module_gb([a, b])))) == \
        {tuple(a.coordinates), tuple(b.coordinates)}


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_columns_of_M_with_g1_units_are_a_gb(p, e):
    fam = determinantal_family(p, e)
    M = fam.M()
    amb = M.target
    vecs = M.column_vectors() + [FreeVector([fam.g1, fam.ring.zero()], amb),
                                 FreeVector([fam.ring.zero(), fam.g1], amb)]
    gb = module_gb(vecs)
    order_leads = lambda vs: {_lead(v) for v in vs}   # noqa: E731
    ins, outs = order_leads(vecs), order_leads(gb)
    # the reduced basis adds no new lead terms
    for l in outs:
        assert any(l[0] == m[0] and all(a <= b for a, b in zip(m[1], l[1])) for m in ins)


def _lead(v):
    from charpreg.groebner import ModuleOrder
    order = ModuleOrder(v.ring, "top")
    return min(v.to_vec(), key=order.sortkey)


# --- syzygies ---------------------------------------------------------------

def test_koszul_syzygy():
    x, y = K3.gen("x"), K3.gen("y")
    S = syzygies(GradedMap.from_matrix([[x, y]]))
    assert S.source.twists == (2,)
    col = S.column(0).coordinates
    assert col[0] * x + col[1] * y == 0
    assert {col[0], col[1]} in ({y, -x}, {-y, x})


def test_syzygy_of_single_nonzerodivisor_is_empty():
    S = syzygies(GradedMap.from_matrix([[K3("x^2 + y*z")]]))
    assert S.source.rank == 0


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_syzygies_of_G_are_the_five_families(p, e):
    fam = determinantal_family(p, e)
    G = GradedMap.from_matrix([fam.G])
    V = g_syzygy_generators(fam)
    for v in V:
        assert not G.apply(v.to_vec())
    S = syzygies(G)
    assert module_gb(V) == module_gb(S.column_vectors())


@given(data=st.data())
def test_syzygy_relations_hold(data):
    gens = []
    for _ in range(data.draw(st.integers(1, 4))):
        d = data.draw(st.integers(1, 3))
        mons = monomials(3, d)
        ms = data.draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True))
        f = K3.zero()
        for m in ms:
            f = f + K3.monomial(m, data.draw(st.integers(1, 2)))
        gens.append(f)
    m = GradedMap.from_matrix([gens])
    S = syzygies(m)
    assert (m @ S).is_zero()
    assert S.is_degree_compatible()
    for t in range(max(S.source.twists, default=0) + 2):
        assert kernel_dim(m, t) == image_dim(S, t)


# --- resolutions --------------------------------------------------------------

def test_principal_and_koszul():
    x, y = K3.gen("x"), K3.gen("y")
    r = resolve_quotient(Ideal([x]))
    assert r.betti().twists == [(0,), (1,)]
    r = resolve_quotient(Ideal([x, y]))
    assert r.betti().twists == [(0,), (1, 1), (2,)]
    assert r.is_complex() and r.is_minimal()


def test_determinantal_hilbert_burch(det2):
    R, I = det2
    res = resolve_quotient(I)
    assert res.betti().twists == [(0,), (2, 2, 2), (3, 3)]
    assert res.is_complex() and res.is_minimal()
    assert_exact(res)
    assert_hilbert_consistent(I, res)
    assert res.betti().regularity() == 1


def test_resolution_of_free_module_has_length_zero():
    pres = GradedMap(K3, GradedFreeModule(()), GradedFreeModule((0, 1)), [])
    res = free_resolution(pres)
    assert res.length == 0 and res.betti().twists == [(0, 1)]


def test_max_length_guard_is_internal_error():
    x, y, z = K3.gens()
    with pytest.raises(RuntimeError):
        free_resolution(quotient_presentation(Ideal([x, y, z])), max_length=2)


def test_minimalize_koszul_unchanged():
    x, y = K3.gen("x"), K3.gen("y")
    res = resolve_quotient(Ideal([x, y]))
    again = minimalize(res)
    assert again.betti().twists == res.betti().twists
    assert [m.matrix() for m in again.maps] == [m.matrix() for m in res.maps]


def _schreyer(gens):
    """Unpruned resolution: presentation as given, then raw syzygy maps."""
    from charpreg.resolution import _syzygy_basis, _vec_degree
    ring = gens[0].ring
    d = GradedMap(ring, GradedFreeModule([g.degree() for g in gens]), GradedFreeModule((0,)),
                  [{(0, e): c for e, c in g.items()} for g in gens])
    maps, modules = [], [d.target]
    while d.source.rank:
        maps.append(d)
        modules.append(d.source)
        src = d.source.twists
        syz = _syzygy_basis(ring, d.columns, d.target.twists, src)
        d = GradedMap(ring, GradedFreeModule([_vec_degree(c, src) for c in syz]),
                      d.source, syz)
    return Resolution(ring, modules, maps)


def test_minimalize_drops_duplicate_generator():
    x = K3.gen("x")
    pres = GradedMap.from_matrix([[x, x]])
    res = Resolution(K3, [pres.target, pres.source, GradedFreeModule((1,))],
                     [pres, GradedMap.from_matrix([[K3.one()], [-K3.one()]], source=[1],
                                                  target=[1, 1])])
    assert res.is_complex() and not res.is_minimal()
    m = minimalize(res)
    assert m.betti().twists == [(0,), (1,)]
    assert m.is_minimal() and m.is_complex()


def test_minimalize_schreyer_of_square_of_maximal_ideal():
    x, y, _ = K3.gens()
    gens = [x * x, x * y, y * y, x * x + x * y]
    raw = _schreyer(gens)
    assert not raw.is_minimal()
    assert raw.is_complex()
    m = minimalize(raw)
    assert m.betti().twists == [(0,), (2, 2, 2), (3, 3)]
    assert m.is_minimal() and m.is_complex()
    assert_exact(m, 5)
    # brute-force Betti numbers in two variables: b_1 = dim I_2 = 3, then
    # b_2 from the Hilbert function of R/I in degrees <= 4
    I = Ideal(gens)
    assert_hilbert_consistent(I, m)


def test_regularity_examples():
    assert regularity(BettiTable([(0,)])) == 0
    assert regularity(BettiTable([])) is NEG_INF
    x, y = K3.gen("x"), K3.gen("y")
    for a, b in [(1, 1), (2, 3), (4, 5)]:
        assert quotient_regularity(Ideal([x ** a, y ** b])) == a + b - 2
    with pytest.raises(ValueError):
        regularity(BettiTable([(0,), (1,)], complete=False))


def test_regularity_of_frobenius_quotient_bounded():
    fam = determinantal_family(2, 1)
    assert quotient_regularity(fam.ideal) <= 3 * fam.q


def test_ideal_regularity_conventions(det2):
    R, I = det2
    assert ideal_regularity(I) == quotient_regularity(I) + 1 == 2
    assert ideal_regularity(Ideal.unit(R)) == 0


def test_minimal_generator_degrees_examples(det2):
    x, y, _ = K3.gens()
    assert minimal_generator_degrees(Ideal([x * x, x * y, y * y, x * x + x * y])) == [2, 2, 2]
    R, I = det2
    assert minimal_generator_degrees(I) == [2, 2, 2]
    for k, g in enumerate(I.generators):
        others = Ideal([h for j, h in enumerate(I.generators) if j != k], R)
        assert not others.contains(g)
    assert minimal_generator_degrees(Ideal([x ** 3 + y ** 3])) == [3]
    with pytest.raises(ValueError):
        minimal_generator_degrees(Ideal([x + y * y]))


SUITE = [
    ("x^2, y^3", K3), ("x*y, y*z, x*z", K3), ("x^2, x*y, y^2", K3),
    ("x^3 - y*z^2, x*y - z^2", K3), ("x^2*y, x*y^2, z^3, x*y*z", K3),
]


def _betti_of(text, ring):
    gens = [ring(t) for t in text.split(",")]
    return resolve_quotient(Ideal(gens, ring))


@pytest.mark.parametrize("text,ring", SUITE)
def test_suite_exact_minimal_and_hilbert(text, ring):
    I = Ideal([ring(t) for t in text.split(",")], ring)
    res = resolve_quotient(I)
    assert res.is_complex() and res.is_minimal()
    for m in res.maps:
        assert m.is_degree_compatible()
    assert_exact(res)
    assert_hilbert_consistent(I, res)


@pytest.mark.parametrize("text,ring", SUITE)
def test_betti_invariant_under_generator_order_and_monomial_order(text, ring):
    base = _betti_of(text, ring).betti().twists
    rev = ",".join(reversed(text.split(",")))
    assert _betti_of(rev, ring).betti().twists == base
    lex = PolynomialRing(ring.p, ring.variables, "lex")
    assert _betti_of(text, lex).betti().twists == base


def test_hilbert_counting_helper_matches_oracle(det2):
    R, I = det2
    leads = lead_term_ideal(I)
    for d in range(6):
        assert hilbert_function_by_counting(leads, (0,), 6, d) == \
            quotient_dim_by_leads(leads, 6, d)


def test_graded_map_degree_compatibility_and_composition():
    x, y = K3.gen("x"), K3.gen("y")
    a = GradedMap.from_matrix([[x, y]])
    b = GradedMap.from_matrix([[y], [-x]], target=[1, 1])
    assert a.is_degree_compatible() and b.is_degree_compatible()
    assert (a @ b).is_zero()
    with pytest.raises(ValueError):
        GradedMap.from_matrix([[x + y * y]])
    bad = GradedMap.from_matrix([[x, y]], source=[1, 2])
    assert not bad.is_degree_compatible()


def test_betti_json_and_summary(det2):
    R, I = det2
    b = resolve_quotient(I).betti()
    assert b.summary() == "1, 3(-2), 2(-3)"
    assert b.to_json()[1] == {"homological_degree": 1, "twists": [2, 2, 2]}
    assert "total:" in str(b)
