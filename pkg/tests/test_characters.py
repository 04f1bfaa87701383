"""Class functions, character tables, and contraction formulas."""

import json
from fractions import Fraction
from importlib import resources

import pytest

from bisetblocks.characters import (CharacterTable, ClassFunction,
                                    abelian_character_table, contract_extended,
                                    contract_middle, contract_over_middle,
                                    conjugate_character_by, external_character,
                                    induce, inflate, ingest_character_table,
                                    inner_product, perm_character, restrict,
                                    value_to_doc,
                                    verify_tensor_character_formula)
from bisetblocks.cyclotomic import Cyclotomic
from bisetblocks.groups import (element_by_name, full_subgroup, product_group,
                                quotient, subgroup_generated)
from bisetblocks.gsets import coset_action, regular_action
from bisetblocks.namedgroups import BUNDLED_NAMES, named_group
from bisetblocks.scenario import bundled_table
from bisetblocks.subdirect import diagonal, rectangle

EXPECTED_DEGREES = {
    "S3": [1, 1, 2],
    "S4": [1, 1, 2, 3, 3],
    "A4": [1, 1, 1, 3],
    "D8": [1, 1, 1, 1, 2],
    "Q8": [1, 1, 1, 1, 2],
    "C6": [1, 1, 1, 1, 1, 1],
}


def el(G, spec):
    return element_by_name(G, spec)


def test_all_bundled_tables_load_and_validate():
    # CharacterTable validates sizes, degrees, and orthogonality on build
    for name in BUNDLED_NAMES:
        t = bundled_table(name)
        assert t.group is named_group(name)
        assert sum(d * d for d in t.degrees()) == t.group.order


def test_expected_degree_sequences():
    for name, degs in EXPECTED_DEGREES.items():
        assert bundled_table(name).degrees() == degs


def test_dual_index_is_an_involution():
    for name in ("S4", "C3", "C6", "Q8"):
        t = bundled_table(name)
        for i in range(len(t.irreducibles)):
            assert t.dual_index(t.dual_index(i)) == i
    # S4 has a rational table: every character is self-dual
    t4 = bundled_table("S4")
    assert all(t4.dual_index(i) == i for i in range(5))
    # the two nontrivial characters of C3 are swapped
    t3 = bundled_table("C3")
    assert t3.dual_index(1) == 2


def test_regular_character_decomposition():
    for name in ("S3", "A4", "D8"):
        t = bundled_table(name)
        reg = perm_character(regular_action(t.group))
        assert t.decompose(reg) == t.degrees()


def test_natural_permutation_character_of_s3():
    S3 = named_group("S3")
    t = bundled_table("S3")
    C2 = subgroup_generated(S3, [el(S3, "(1 2)")])
    chi = perm_character(coset_action(S3, C2))
    assert [v.as_int() for v in chi.values] == [3, 1, 0]
    assert t.decompose(chi) == [1, 0, 1]  # trivial plus the 2-dimensional


def test_inner_product_orthogonality():
    t = bundled_table("S3")
    for i, a in enumerate(t.irreducibles):
        for j, b in enumerate(t.irreducibles):
            assert inner_product(a, b) == (1 if i == j else 0)


def test_frobenius_reciprocity():
    S4 = named_group("S4")
    t = bundled_table("S4")
    C4 = subgroup_generated(S4, [el(S4, "(1 2 3 4)")])
    local = abelian_character_table(C4.as_group())
    for psi in local.irreducibles:
        up = induce(psi, C4)
        for chi in t.irreducibles:
            down = restrict(chi, C4)
            assert inner_product(up, chi) == inner_product(psi, down)


def test_induced_trivial_is_the_coset_character():
    S4 = named_group("S4")
    C4 = subgroup_generated(S4, [el(S4, "(1 2 3 4)")])
    triv = abelian_character_table(C4.as_group()).irreducibles[0]
    assert induce(triv, C4) == perm_character(coset_action(S4, C4))


def test_inflation_along_quotient():
    S4 = named_group("S4")
    V4 = subgroup_generated(S4, [el(S4, "(1 2)(3 4)"), el(S4, "(1 3)(2 4)")])
    Q, pi = quotient(S4, V4)
    reg_q = perm_character(regular_action(Q))
    inf = inflate(reg_q, pi)
    assert inf.degree() == 6
    # inflated character is constant on V4-cosets
    for g in range(S4.order):
        for n in V4.elements:
            assert inf.at(g) == inf.at(S4.mul(g, n))


def test_external_character_values():
    chi = bundled_table("S3").irreducibles[2]
    psi = bundled_table("C2").irreducibles[1]
    mu = external_character(chi, psi)
    amb = product_group(named_group("S3"), named_group("C2"))
    assert mu.group is amb.group
    assert mu.degree() == 2
    g = el(named_group("S3"), "(1 2 3)")
    assert mu.at(amb.encode(g, 1)) == chi.at(g) * psi.at(1)


def test_contract_middle_recovers_multiplicities():
    # mu = chi x dual(psi) contracted against psi gives <psi, psi> chi
    S3 = named_group("S3")
    C3 = named_group("C3")
    tH = bundled_table("C3")
    chi = bundled_table("S3").irreducibles[2]
    psi = tH.irreducibles[1]
    mu = external_character(chi, psi.conjugate())
    amb = product_group(S3, C3)
    out = contract_middle(mu, psi, amb)
    assert out == chi
    other = tH.irreducibles[2]
    assert contract_middle(mu, other, amb).is_zero()


def test_contract_over_middle_composes():
    # (chi x psi*) then (psi x theta*) composes to chi x theta*
    S3 = named_group("S3")
    C3 = named_group("C3")
    C2 = named_group("C2")
    chi = bundled_table("S3").irreducibles[1]
    psi = bundled_table("C3").irreducibles[1]
    theta = bundled_table("C2").irreducibles[1]
    amb1 = product_group(S3, C3)
    amb2 = product_group(C3, C2)
    mu1 = external_character(chi, psi.conjugate())
    mu2 = external_character(psi, theta.conjugate())
    out = contract_over_middle(mu1, mu2, amb1, amb2)
    assert out == external_character(chi, theta.conjugate())


def test_conjugate_character_stays_irreducible():
    S3 = named_group("S3")
    amb = product_group(S3, S3)
    X = diagonal(subgroup_generated(S3, [el(S3, "(1 2 3)")]))
    chi = abelian_character_table(X.as_group()).irreducibles[1]
    x = amb.encode(el(S3, "(1 2)"), S3.identity)
    Xc, chic = conjugate_character_by(chi, X, x)
    assert Xc.order == X.order
    assert chic.degree() == 1
    assert inner_product(chic, chic) == 1


def test_tensor_character_formula_instance():
    S3 = named_group("S3")
    amb = product_group(S3, S3)
    C3 = subgroup_generated(S3, [el(S3, "(1 2 3)")])
    X = diagonal(full_subgroup(S3))
    Y = rectangle(amb, C3, full_subgroup(S3))
    chi_m = perm_character(regular_action(X.as_group()))
    chi_n = perm_character(regular_action(Y.as_group()))
    out = verify_tensor_character_formula(X, Y, chi_m, chi_n)
    assert out["equal"]
    assert out["double_coset_count"] == 1  # p2(X) is all of the middle
    # degree bookkeeping: ind(chi_m)(1) ind(chi_n)(1) / |H|
    assert out["lhs"].degree() == 36 * 36 // 6


def test_contract_extended_is_the_tensor_character():
    from bisetblocks.gsets import extended_tensor
    S3 = named_group("S3")
    amb = product_group(S3, S3)
    C3 = subgroup_generated(S3, [el(S3, "(1 2 3)")])
    X = diagonal(full_subgroup(S3))
    Y = rectangle(amb, C3, full_subgroup(S3))
    U = regular_action(X.as_group())
    V = coset_action(Y.as_group(), full_subgroup(Y.as_group()))
    W = extended_tensor(X, Y, U, V)
    assert perm_character(W) == contract_extended(
        X, Y, perm_character(U), perm_character(V))


def test_abelian_character_table_of_c12():
    C12 = named_group("C12")
    t = abelian_character_table(C12)
    assert t.degrees() == [1] * 12
    g = 1  # a generator of the cyclic group
    values = {t.irreducibles[i].at(g) for i in range(12)}
    assert len(values) == 12  # twelve distinct 12th roots of unity
    for chi in t.irreducibles:
        assert chi.at(g) ** 12 == 1


def test_abelian_table_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_character_table(named_group("S3"))


def test_decompose_rejects_non_virtual():
    t = bundled_table("S3")
    v = ClassFunction(t.group, [1, 0, 0])
    with pytest.raises(ValueError):
        t.decompose(v)


def test_ingest_normalizes_column_order():
    text = resources.files("bisetblocks").joinpath(
        "data/tables/S3.json").read_text()
    doc = json.loads(text)
    # reverse the listed classes and every character's value row
    flipped = dict(doc)
    flipped["classes"] = list(reversed(doc["classes"]))
    flipped["characters"] = [
        {"name": c["name"], "values": list(reversed(c["values"]))}
        for c in doc["characters"]]
    t0 = ingest_character_table(doc, group=named_group("S3"))
    t1 = ingest_character_table(flipped, group=named_group("S3"))
    assert [c.values for c in t0.irreducibles] == \
        [c.values for c in t1.irreducibles]


def test_ingest_rejects_bad_class_data():
    text = resources.files("bisetblocks").joinpath(
        "data/tables/S3.json").read_text()
    doc = json.loads(text)
    bad = dict(doc)
    bad["classes"] = doc["classes"][:-1]
    with pytest.raises(ValueError):
        ingest_character_table(bad, group=named_group("S3"))


def test_value_doc_round_trip():
    # character values are algebraic integers: integer coordinates
    vals = [Cyclotomic.zeta(3),
            Cyclotomic.zeta(12) + 1,
            Cyclotomic.zeta(8) ** 5,
            Cyclotomic.from_rational(-2),
            Cyclotomic.from_rational(0)]
    from bisetblocks.characters import _value_from_doc
    for v in vals:
        doc = value_to_doc(v)
        assert _value_from_doc(doc) == v
    assert value_to_doc(Cyclotomic.from_rational(-2)) == -2


def test_class_function_algebra():
    t = bundled_table("S3")
    a, b = t.irreducibles[1], t.irreducibles[2]
    assert (a + b) - b == a
    assert (2 * a).degree() == 2
    assert (-a).degree() == -1
    assert (a * a) == t.irreducibles[0] + 0 * a  # sign squared is trivial
    with pytest.raises(ValueError):
        a + abelian_character_table(named_group("C2")).irreducibles[0]
