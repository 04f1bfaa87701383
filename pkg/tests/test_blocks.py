"""Block idempotents, Brauer homomorphism, defect groups, Brauer pairs."""

from fractions import Fraction

import pytest

from bisetblocks.blocks import (CentralElement, NotPIntegral, ReductionMap,
                                assign_characters_to_blocks,
                                block_idempotents, brauer_construction,
                                brauer_hom, defect_group,
                                defect_zero_simple_dim, fixed_cosets,
                                group_algebra_mul, maximal_brauer_pair,
                                multiplicative_order, principal_block_index,
                                splitting_field_degree, splitting_params)
from bisetblocks.cyclotomic import Cyclotomic
from bisetblocks.gf import fq_field
from bisetblocks.groups import (element_by_name, full_subgroup,
                                subgroup_generated, sylow_subgroup)
from bisetblocks.gsets import biset_coset
from bisetblocks.namedgroups import named_group
from bisetblocks.scenario import bundled_table
from bisetblocks.subdirect import diagonal

# (group, p) -> (splitting degree, block count, partition by names,
#                defect orders in block order, principal index)
BLOCK_DATA = {
    ("S3", 2): (2, 2, [("chi2",), ("chi0", "chi1")], [1, 2], 1),
    ("S3", 3): (1, 1, [("chi0", "chi1", "chi2")], [3], 0),
    ("S4", 2): (2, 1, [("chi0", "chi1", "chi2", "chi3", "chi4")], [8], 0),
    ("S4", 3): (2, 3, [("chi3",), ("chi4",), ("chi0", "chi1", "chi2")],
                [1, 1, 3], 2),
    ("A4", 2): (2, 1, [("chi0", "chi1", "chi2", "chi3")], [4], 0),
    ("A4", 3): (1, 2, [("chi3",), ("chi0", "chi1", "chi2")], [1, 3], 1),
    ("C6", 2): (2, 3, [("chi0", "chi1"), ("chi3", "chi4"), ("chi2", "chi5")],
                [2, 2, 2], 0),
    ("C6", 3): (1, 2, [("chi1", "chi3", "chi5"), ("chi0", "chi2", "chi4")],
                [3, 3], 1),
    ("D8", 2): (1, 1, [("chi0", "chi1", "chi2", "chi3", "chi4")], [8], 0),
    ("Q8", 2): (1, 1, [("chi0", "chi1", "chi2", "chi3", "chi4")], [8], 0),
}


def field_for(G, p):
    m, _ = splitting_params(G, p)
    return fq_field(p, m)


def test_multiplicative_order():
    assert multiplicative_order(2, 3) == 2
    assert multiplicative_order(3, 2) == 1
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 1) == 1


def test_splitting_params():
    for (name, p), (m, *_rest) in BLOCK_DATA.items():
        G = named_group(name)
        got_m, got_q = splitting_params(G, p)
        assert got_m == m and got_q == p ** m
    assert splitting_field_degree(
        [named_group("S3"), named_group("C6")], 2) == 2


def test_reduction_map_values():
    F3 = fq_field(3, 1)
    red = ReductionMap(F3)
    assert red(Cyclotomic.from_rational(2)) == 2
    assert red(Cyclotomic.from_rational(Fraction(1, 2))) == 2  # 2^-1 = 2
    assert red(Cyclotomic.zeta(2)) == 2                        # -1
    assert red(Cyclotomic.zeta(3)) == 1   # p-part of the conductor drops
    assert red(Cyclotomic.zeta(6)) == 2   # zeta_6 = -zeta_3^2 -> -1
    F4 = fq_field(2, 2)
    red4 = ReductionMap(F4)
    w = red4(Cyclotomic.zeta(3))
    assert w not in (0, 1)
    assert F4.power(w, 3) == 1


def test_reduction_map_rejects_p_in_denominator():
    red = ReductionMap(fq_field(3, 1))
    with pytest.raises(NotPIntegral):
        red(Cyclotomic.from_rational(Fraction(1, 3)))


def test_reduction_map_needs_enough_roots():
    red = ReductionMap(fq_field(3, 1))  # q - 1 = 2, no 5th roots
    with pytest.raises(ValueError):
        red(Cyclotomic.zeta(5))


def test_block_counts_partitions_and_defects():
    for (name, p), (_, count, partition, defects, principal) in \
            BLOCK_DATA.items():
        G = named_group(name)
        F = field_for(G, p)
        blocks = block_idempotents(G, p, F)
        assert len(blocks) == count, (name, p)
        table = bundled_table(name)
        part = assign_characters_to_blocks(table, blocks, F)
        got = [tuple(table.names[i] for i in pa) for pa in part]
        assert got == partition, (name, p)
        assert [defect_group(G, p, b, F).order for b in blocks] == defects
        assert principal_block_index(table, blocks, F) == principal


def test_blocks_sum_to_one_and_are_orthogonal():
    for name, p in [("S3", 2), ("C6", 3), ("S4", 3)]:
        G = named_group(name)
        F = field_for(G, p)
        blocks = block_idempotents(G, p, F)
        total = CentralElement.zero(G, F)
        for b in blocks:
            assert b.is_idempotent()
            total = total + b
        assert total == CentralElement.one(G, F)
        for i, b in enumerate(blocks):
            for c in blocks[i + 1:]:
                assert b * c == CentralElement.zero(G, F)


def test_character_partition_covers_exactly_once():
    for name, p in [("S4", 2), ("S4", 3), ("A4", 3)]:
        G = named_group(name)
        F = field_for(G, p)
        blocks = block_idempotents(G, p, F)
        part = assign_characters_to_blocks(bundled_table(name), blocks, F)
        seen = [i for pa in part for i in pa]
        assert sorted(seen) == list(range(len(bundled_table(name).names)))


def test_principal_defect_group_is_sylow():
    for name, p in [("S3", 2), ("S3", 3), ("A4", 2), ("S4", 3), ("C6", 2)]:
        G = named_group(name)
        F = field_for(G, p)
        blocks = block_idempotents(G, p, F)
        table = bundled_table(name)
        b0 = blocks[principal_block_index(table, blocks, F)]
        D = defect_group(G, p, b0, F)
        P = sylow_subgroup(G, p)
        assert D.elements == P.canonical_conjugate().elements


def test_brauer_hom_is_multiplicative_on_the_center():
    # br_D is an algebra map on D-fixed elements; class sums are G-fixed
    for name, p in [("S3", 2), ("A4", 3), ("S4", 3)]:
        G = named_group(name)
        F = field_for(G, p)
        D = sylow_subgroup(G, p).canonical_conjugate()
        from bisetblocks.groups import centralizer
        Cg = centralizer(G, D).as_group()
        classes = G.conjugacy_classes()
        k = len(classes)

        def class_vec(idx):
            vec = [0] * G.order
            for g in classes[idx]:
                vec[g] = 1
            return vec
        for i in range(k):
            for j in range(k):
                vi, vj = class_vec(i), class_vec(j)
                prod = group_algebra_mul(F, G, vi, vj)
                lhs = brauer_hom(prod, D, F)
                rhs = group_algebra_mul(F, Cg, brauer_hom(vi, D, F),
                                        brauer_hom(vj, D, F))
                assert lhs == rhs


def test_brauer_hom_rejects_unfixed_elements():
    G = named_group("S3")
    F = field_for(G, 2)
    D = sylow_subgroup(G, 2)
    vec = [0] * G.order
    vec[element_by_name(G, "(1 2 3)")] = 1  # a single element, not D-fixed
    with pytest.raises(ValueError):
        brauer_hom(vec, D, F)


def test_maximal_brauer_pairs():
    for name, p in [("S3", 2), ("C6", 3), ("A4", 3)]:
        G = named_group(name)
        F = field_for(G, p)
        blocks = block_idempotents(G, p, F)
        for b in blocks:
            D, e = maximal_brauer_pair(G, p, b, F)
            assert D.elements == defect_group(G, p, b, F).elements
            assert e.is_idempotent()
            from bisetblocks.groups import centralizer
            Cg = centralizer(G, D).as_group()
            br = brauer_hom(b.to_vector(), D, F)
            prod = group_algebra_mul(F, Cg, br, e.to_vector())
            assert prod == e.to_vector()


def test_defect_zero_dimensions():
    G = named_group("S3")
    F = field_for(G, 2)
    blocks = block_idempotents(G, 2, F)
    table = bundled_table("S3")
    part = assign_characters_to_blocks(table, blocks, F)
    for bi, b in enumerate(blocks):
        D, e = maximal_brauer_pair(G, 2, b, F)
        if D.order == 1:
            # defect zero: the simple dimension is the character degree
            (ci,) = part[bi]
            assert defect_zero_simple_dim(G, D, e, F) == \
                table.degrees()[ci] == 2
    S4 = named_group("S4")
    F4 = field_for(S4, 3)
    blocks4 = block_idempotents(S4, 3, F4)
    dims = []
    for b in blocks4:
        D, e = maximal_brauer_pair(S4, 3, b, F4)
        if D.order == 1:
            dims.append(defect_zero_simple_dim(S4, D, e, F4))
    assert dims == [3, 3]


def test_central_element_algebra():
    G = named_group("C6")
    F = fq_field(3, 1)
    one = CentralElement.one(G, F)
    zero = CentralElement.zero(G, F)
    assert one.is_idempotent() and zero.is_idempotent()
    assert one * one == one and one + zero == one
    assert one - one == zero
    assert one.scale(2) + one == zero  # 2 + 1 = 0 mod 3
    assert one.power(5) == one
    vec = one.to_vector()
    assert vec[G.identity] == 1 and sum(vec) == 1


def test_brauer_construction_counts_fixed_cosets():
    S3 = named_group("S3")
    C3 = subgroup_generated(S3, [element_by_name(S3, "(1 2 3)")])
    X = diagonal(full_subgroup(S3))
    amb = X.ambient
    P = diagonal(C3)  # a p-subgroup of the ambient product
    Psub = subgroup_generated(amb.group, list(P.elements))
    got = fixed_cosets(X, Psub)
    # independent brute-force count over coset representatives
    U = biset_coset(X)
    brute = [x for x in range(U.size)
             if all(U.action.rows[t][x] == x for t in Psub.elements)]
    assert got == brute
    # cosets of the diagonal form S3 under (a, b) . x = a x b^-1; the
    # delta(C3)-fixed points are the centralizer of C3, which is C3
    assert len(got) == 3

    out = brauer_construction([(X, -2)], Psub)
    assert len(out) == 1
    rec = out[0]
    assert rec["coefficient"] == -2
    assert rec["fixed"] == got
    assert rec["action"].size == len(got)
    # the normalizer action must close on the fixed set
    dec = rec["action"].decompose()
    assert dec.total_size() == len(got)
