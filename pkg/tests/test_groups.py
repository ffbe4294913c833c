import pytest
from hypothesis import given, settings, strategies as st

from cayley_forge.errors import InvalidParameterError, PreconditionError, ResourceLimitError
from cayley_forge.groups import (
    GroupHom,
    canonical_generating_set,
    make_cyclic,
    make_dihedral,
    quotient,
    same_table,
    subgroup_generated,
    wreath_z2,
)


def test_cyclic_basics():
    assert make_cyclic(1).order == 1
    z2 = make_cyclic(2)
    assert z2.order == 2 and z2.is_involution(1)
    z9 = make_cyclic(9)
    assert z9.mul(4, 7) == 2
    assert z9.inv(3) == 6
    with pytest.raises(InvalidParameterError):
        make_cyclic(0)


def test_dihedral_presentation():
    D = make_dihedral(9)
    a, b = D.element(1), D.element(0, 1)
    assert D.order == 18
    assert D.mul(D.mul(b, a), b) == D.element(8) == D.inv(a)
    assert D.power(a, 9) == 0 and D.power(b, 2) == 0
    ab = D.mul(a, b)
    assert D.mul(ab, ab) == 0
    assert D.label(D.element(3, 1)) == "a^3 b"
    assert D.label(0) == "1" and D.label(b) == "b" and D.label(D.element(1, 1)) == "a b"
    with pytest.raises(InvalidParameterError):
        make_dihedral(0)


def test_dihedral_one_is_z2():
    assert same_table(make_dihedral(1), make_cyclic(2))


def test_dihedral_reflections_are_involutions():
    D = make_dihedral(3)
    involutions = [g for g in D.elements() if D.mul(g, g) == 0 and g != 0]
    assert sorted(involutions) == [3, 4, 5]


@pytest.mark.parametrize("n", range(1, 13))
def test_dihedral_structure(n):
    D = make_dihedral(n)
    reflections = [D.element(i, 1) for i in range(n)]
    assert all(D.is_involution(r) for r in reflections)
    assert len(subgroup_generated(D, [D.element(1)])) == n


@pytest.mark.parametrize("G", [make_cyclic(1), make_cyclic(6), make_dihedral(1),
                               make_dihedral(4), make_dihedral(9), make_dihedral(16),
                               wreath_z2(make_cyclic(2)), wreath_z2(make_cyclic(3))],
                         ids=lambda G: G.name)
def test_axioms_exhaustive(G):
    G.check_axioms()


def test_axioms_sampled_large():
    W = wreath_z2(wreath_z2(make_cyclic(2)))
    assert W.order == 2048
    W.check_axioms(samples=3000)


def naive_wreath_mul(base, x, y):
    """(a, g)(b, h) = (a + b^g, g h) with functions as tuples and
    b^g(t) = b(g^-1 t) evaluated pointwise."""
    m = base.order
    a_int, g = divmod(x, m)
    b_int, h = divmod(y, m)
    a = [(a_int >> t) & 1 for t in range(m)]
    b = [(b_int >> t) & 1 for t in range(m)]
    gi = base.inv(g)
    b_g = [b[base.mul(gi, t)] for t in range(m)]
    bits = [(a[t] + b_g[t]) % 2 for t in range(m)]
    return sum(v << t for t, v in enumerate(bits)) * m + base.mul(g, h)


@pytest.mark.parametrize("base", [make_cyclic(1), make_cyclic(2), make_cyclic(3),
                                  make_cyclic(4), make_dihedral(2)], ids=lambda G: G.name)
def test_wreath_matches_pointwise_formula(base):
    W = wreath_z2(base)
    assert W.order == 2 ** base.order * base.order
    for x in W.elements():
        for y in W.elements():
            assert W.mul(x, y) == naive_wreath_mul(base, x, y)


def test_wreath_z2_z2_worked_product():
    W = wreath_z2(make_cyclic(2))
    assert W.order == 8
    x = W.pack(0b01, 1)  # (a_1, 1) with 1 the non-identity top element
    assert W.mul(x, x) == W.pack(0b11, 0)
    assert W.mul(0, x) == x


def test_wreath_cap():
    with pytest.raises(ResourceLimitError):
        wreath_z2(make_cyclic(12))
    assert wreath_z2(make_cyclic(11)).order == 2 ** 11 * 11


def test_canonical_generating_set():
    Z2 = make_cyclic(2)
    W1 = wreath_z2(Z2)
    S1 = canonical_generating_set(Z2, {1}, W1)
    assert len(S1) == 2
    assert all(W1.inv(s) in S1 for s in S1) and 0 not in S1
    W2 = wreath_z2(W1)
    S2 = canonical_generating_set(W1, S1, W2)
    assert len(S2) == 3
    assert len(subgroup_generated(W2, S2)) == W2.order


@pytest.mark.parametrize("S, msg", [({0, 1}, "identity"), ({1}, "inverse"),
                                    ({2, 4}, "generate")])
def test_canonical_generating_set_preconditions(S, msg):
    with pytest.raises(PreconditionError, match=msg):
        canonical_generating_set(make_cyclic(6), S)


def test_subgroup_generated():
    D36 = make_dihedral(18)
    assert subgroup_generated(D36, [D36.element(9)]) == {0, 9}
    assert subgroup_generated(D36, []) == {0}
    D18 = make_dihedral(9)
    assert len(subgroup_generated(D18, [D18.element(0, 1), D18.element(1, 1)])) == 18


def test_quotient_dihedral():
    D36 = make_dihedral(18)
    N = subgroup_generated(D36, [D36.element(9)])
    Q, phi = quotient(D36, N)
    assert Q.order == 18
    assert same_table(Q, make_dihedral(9))
    assert phi.is_surjective()
    phi.check()


def test_quotient_trivial_and_cyclic():
    G = make_dihedral(5)
    Q, phi = quotient(G, {0})
    assert Q.order == G.order and sorted(phi.map) == list(G.elements())
    Z6 = make_cyclic(6)
    Q, phi = quotient(Z6, subgroup_generated(Z6, [3]))
    assert Q.order == 3
    phi.check()


def test_quotient_rejects_non_normal():
    D = make_dihedral(3)
    with pytest.raises(PreconditionError, match="not normal") as info:
        quotient(D, {0, D.element(0, 1)})
    g, n = info.value.witness
    assert D.mul(D.mul(g, n), D.inv(g)) not in {0, D.element(0, 1)}


def test_quotient_rejects_non_subgroup():
    with pytest.raises(PreconditionError, match="closed"):
        quotient(make_cyclic(6), {0, 1})


def test_hom_check_catches_bad_map():
    Z4, Z2 = make_cyclic(4), make_cyclic(2)
    GroupHom(Z4, Z2, (0, 1, 0, 1)).check()
    with pytest.raises(PreconditionError):
        GroupHom(Z4, Z2, (0, 1, 1, 0)).check()


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 12), m=st.integers(1, 6), data=st.data())
def test_quotient_projection_is_hom(n, m, data):
    D = make_dihedral(n * m)
    N = subgroup_generated(D, [D.element(n)])
    Q, phi = quotient(D, N)
    assert Q.order * len(N) == D.order
    g = data.draw(st.integers(0, D.order - 1))
    h = data.draw(st.integers(0, D.order - 1))
    assert phi(D.mul(g, h)) == Q.mul(phi(g), phi(h))


def test_table_cap():
    t = wreath_z2(make_cyclic(2)).table()
    assert t.shape == (8, 8) and t[6, 6] == 0
    with pytest.raises(ResourceLimitError):
        wreath_z2(make_cyclic(10)).table()
