"""Element arithmetic, alternating bases, and the structured product rules."""

import random

import pytest

from ptlalg.algebra import (AlgebraSpec, Element, bar_multiply, bar_of,
                            change_basis, hat_of, motzkin_spec,
                            tilde_multiply, tilde_of, tl_spec)
from ptlalg.diagram import (Diagram, balanced_motzkin_diagrams, compose,
                            gen_e, gen_p, gen_r, gen_l, identity,
                            motzkin_diagrams, omega, partial_brauer_diagrams)
from ptlalg.scalar import DeltaPoly

delta = DeltaPoly.gen()


def oracle(spec, d1, d2, which):
    expander = bar_of if which == "bar" else tilde_of
    return change_basis(expander(spec, d1) * expander(spec, d2), which)


def test_diagram_multiplication():
    T3 = tl_spec(3)
    e1 = Element.of(T3, gen_e(1, 3))
    e2 = Element.of(T3, gen_e(2, 3))
    assert e1 * e2 * e1 == e1
    assert e1 * e1 == delta * e1
    one = Element.unit(T3)
    assert one * e1 == e1 and e1 * one == e1
    M2 = motzkin_spec(2)
    p1 = Element.of(M2, gen_p(1, 2))
    assert p1 * p1 == p1  # delta' = 1


def test_two_parameter_rule():
    spec = AlgebraSpec("partial_brauer", 2, delta, delta_prime=7)
    p1 = Element.of(spec, gen_p(1, 2))
    assert p1 * p1 == 7 * p1
    e = Element.of(spec, gen_e(1, 2))
    assert e * e == delta * e


def test_partition_flavor_uses_total_blocks():
    spec = AlgebraSpec("partition", 2)
    p1 = Element.of(spec, gen_p(1, 2))
    assert p1 * p1 == delta * p1


def test_mismatched_specs_rejected():
    with pytest.raises(ValueError):
        Element.of(motzkin_spec(2), gen_e(1, 2)) * Element.of(motzkin_spec(3), gen_e(1, 3))


def test_tilde_expansions():
    M2 = motzkin_spec(2)
    e = gen_e(1, 2)
    cup = Diagram.from_edges(2, [(0, 1)])
    cap = Diagram.from_edges(2, [(2, 3)])
    assert tilde_of(M2, e).terms == {e: 1, cup: -1, cap: -1, omega(2): 1}
    for g in (gen_r(1, 2), gen_l(1, 2), gen_p(1, 2)):
        assert tilde_of(M2, g).terms == {g: 1}
    # leading coefficient is +1 for every expansion
    for d in motzkin_diagrams(2):
        for expander in (bar_of, tilde_of, hat_of):
            assert expander(M2, d).terms[d] == 1


def test_bar_equals_hat_tilde_composites():
    M3 = motzkin_spec(3)
    for d in motzkin_diagrams(3):
        via_tilde = Element.zero(M3)
        for dd, c in tilde_of(M3, d).terms.items():
            via_tilde = via_tilde + hat_of(M3, dd).scale(c)
        via_hat = Element.zero(M3)
        for dd, c in hat_of(M3, d).terms.items():
            via_hat = via_hat + tilde_of(M3, dd).scale(c)
        assert via_tilde == bar_of(M3, d) == via_hat


def test_change_basis_round_trips():
    M2 = motzkin_spec(2)
    rng = random.Random(5)
    pool = motzkin_diagrams(2)
    for _ in range(40):
        terms = {rng.choice(pool): rng.randrange(-3, 4) for _ in range(3)}
        x = Element(M2, terms)
        for b in ("bar", "tilde"):
            y = change_basis(x, b)
            assert change_basis(y, "diagram") == x
    # bar <-> tilde directly
    x = Element.of(M2, gen_e(1, 2), 1, "bar")
    assert change_basis(change_basis(x, "tilde"), "bar") == x


def test_identity_in_bar_basis():
    M1 = motzkin_spec(1)
    one = change_basis(Element.unit(M1), "bar")
    assert one.terms == {identity(1): 1, omega(1): 1}


def test_e_in_tilde_coordinates():
    M2 = motzkin_spec(2)
    e = gen_e(1, 2)
    x = change_basis(Element.of(M2, e), "tilde")
    cup = Diagram.from_edges(2, [(0, 1)])
    cap = Diagram.from_edges(2, [(2, 3)])
    assert x.terms == {e: 1, cup: 1, cap: 1, omega(2): 1}


def test_bar_multiply_examples():
    M2 = motzkin_spec(2)
    e = gen_e(1, 2)
    prod = bar_multiply(M2, e, e)
    assert prod == Element.of(M2, e, delta - 1, "bar")
    # mismatched frames vanish
    assert bar_multiply(M2, e, gen_r(1, 2)).is_zero()


def test_bar_oracle_exhaustive_partial_brauer_k2():
    spec = AlgebraSpec("partial_brauer", 2)
    pool = partial_brauer_diagrams(2)
    for d1 in pool:
        for d2 in pool:
            assert bar_multiply(spec, d1, d2) == oracle(spec, d1, d2, "bar")


def test_tilde_oracle_exhaustive_motzkin_k2():
    M2 = motzkin_spec(2)
    pool = motzkin_diagrams(2)
    for d1 in pool:
        for d2 in pool:
            assert tilde_multiply(M2, d1, d2) == oracle(M2, d1, d2, "tilde")


def test_structured_oracles_exhaustive_motzkin_k3():
    M3 = motzkin_spec(3)
    pool = motzkin_diagrams(3)
    for d1 in pool:
        for d2 in pool:
            assert tilde_multiply(M3, d1, d2) == oracle(M3, d1, d2, "tilde")
            assert bar_multiply(M3, d1, d2) == oracle(M3, d1, d2, "bar")


def test_structured_oracles_sampled_k4():
    rng = random.Random(404)
    M4 = motzkin_spec(4)
    pool = balanced_motzkin_diagrams(4)
    for _ in range(40):
        d1, d2 = rng.choice(pool), rng.choice(pool)
        assert bar_multiply(M4, d1, d2) == oracle(M4, d1, d2, "bar")
        assert tilde_multiply(M4, d1, d2) == oracle(M4, d1, d2, "tilde")


def test_tilde_corollary_rl_action():
    # x tilde(d) = tilde(xd) when the horizontal top frame of d lands on
    # non-isolated bottom vertices of x, else 0 (x without horizontal edges)
    M3 = motzkin_spec(3)
    xs = [gen_r(i, 3) for i in (1, 2)] + [gen_l(i, 3) for i in (1, 2)] + [gen_p(j, 3) for j in (1, 2, 3)]
    for x in xs:
        xel = Element.of(M3, x)
        for d in motzkin_diagrams(3):
            lhs = xel * tilde_of(M3, d)
            fr_d = d.frames()
            if fr_d.top_h <= x.frames().bot:
                want = tilde_of(M3, compose(x, d).diagram)
            else:
                want = Element.zero(M3)
            assert lhs == want, (x, d)


def test_eight_term_identity():
    M3 = motzkin_spec(3)
    lhs = tilde_of(M3, gen_e(1, 3)) * tilde_of(M3, gen_e(2, 3))
    d3 = compose(gen_e(1, 3), gen_e(2, 3)).diagram
    rhs = (Element.unit(M3) - Element.of(M3, gen_p(3, 3))) * tilde_of(M3, d3)
    assert lhs == rhs
    assert len(lhs.terms) == 8
    assert sorted(lhs.terms.values()) == [-1, -1, -1, -1, 1, 1, 1, 1]
    # structured product produces the same thing in tilde coordinates
    st = tilde_multiply(M3, gen_e(1, 3), gen_e(2, 3))
    assert set(st.terms.values()) == {1, -1} and len(st.terms) == 2
    assert change_basis(st, "diagram") == lhs


def test_multiplication_associative_random():
    rng = random.Random(29)
    for k in (2, 3):
        spec = motzkin_spec(k)
        pool = motzkin_diagrams(k)
        for _ in range(40):
            x, y, z = (Element.of(spec, rng.choice(pool), rng.randrange(1, 4))
                       for _ in range(3))
            assert (x * y) * z == x * (y * z)


def test_no_horizontal_edges_tilde_is_identity():
    M3 = motzkin_spec(3)
    for d in motzkin_diagrams(3):
        if not d.cups() and not d.caps():
            assert tilde_of(M3, d).terms == {d: 1}


def test_ptl_closure_under_tilde_products():
    M3 = motzkin_spec(3)
    for d1 in balanced_motzkin_diagrams(3):
        for d2 in balanced_motzkin_diagrams(3):
            prod = tilde_multiply(M3, d1, d2)
            assert all(d.is_balanced() for d in prod.terms)


def test_element_json_round_trip():
    M3 = motzkin_spec(3)
    x = tilde_of(M3, gen_e(1, 3)).scale(delta - 2)
    as_json = x.to_json()
    assert Element.from_json(M3, as_json) == x
