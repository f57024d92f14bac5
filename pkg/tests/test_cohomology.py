import pytest

from thumbtack.cohomology import (Cochain, FiniteGroup, FiniteModule,
                                  all_unit_actions, cyclic_group,
                                  dihedral_group, direct_product,
                                  enumerate_cocycles_bruteforce,
                                  groups_up_to_order, h1, is_cocycle,
                                  kummer_delta_check, quaternion_group,
                                  sah_verify, trivial_module,
                                  unit_action_module, _get_space)
from thumbtack.errors import SizeLimitError
from thumbtack.multgroup import MultSubgroup


def test_group_construction_verifies_axioms():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [0, 1]])          # columns not permutations
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [1, 0]])          # no identity row/col pairing
    # a non-associative magma with latin-square rows
    bad = [[0, 1, 2, 3, 4],
           [1, 0, 3, 4, 2],
           [2, 4, 0, 1, 3],
           [3, 2, 4, 0, 1],
           [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError):
        FiniteGroup(bad)


def test_catalog():
    names = [g.name for g in groups_up_to_order(8)]
    assert names == ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D3",
                     "C7", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8"]
    orders = [g.order for g in groups_up_to_order(8)]
    assert orders == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]


def test_group_structure_facts():
    q8 = quaternion_group()
    assert not q8.is_abelian() and len(q8.center()) == 2
    d4 = dihedral_group(4)
    assert not d4.is_abelian() and len(d4.center()) == 2
    d3 = dihedral_group(3)
    assert len(d3.center()) == 1
    c6 = cyclic_group(6)
    assert c6.is_abelian() and len(c6.generators()) == 1
    v4 = direct_product(cyclic_group(2), cyclic_group(2))
    assert len(v4.generators()) == 2


def test_module_verification():
    C2 = cyclic_group(2)
    with pytest.raises(ValueError):
        FiniteModule(C2, (4,), [[[1]], [[2]]])      # 2 is not invertible
    with pytest.raises(ValueError):
        FiniteModule(C2, (4,), [[[3]], [[1]]])      # identity must act as 1
    with pytest.raises(ValueError):
        # sigma -> 3 is not a homomorphism from C3 (3^3 != 1 mod 8)
        unit_action_module(cyclic_group(3), 8, [1, 3, 1])
    M = unit_action_module(C2, 4, [1, 3])
    assert M.act(1, (1,)) == (3,)


def test_h1_negation_example():
    C2 = cyclic_group(2)
    M = unit_action_module(C2, 4, [1, 3])
    rep = h1(C2, M)
    assert rep.cocycle_count == 4
    assert rep.coboundary_count == 2
    assert rep.invariants == [2]
    assert len(rep.representatives) == 1
    f = rep.representatives[0]
    assert is_cocycle(f, M)


def test_h1_trivial_group():
    C1 = cyclic_group(1)
    rep = h1(C1, trivial_module(C1, (12,)))
    assert rep.h1_order() == 1 and rep.cocycle_count == 1


def test_h1_coprime_orders():
    # trivial action of C2 on Z/3: cocycles are Hom(C2, Z/3) = 0
    C2 = cyclic_group(2)
    rep = h1(C2, unit_action_module(C2, 3, [1, 1]))
    assert rep.h1_order() == 1
    assert rep.cocycle_count == 1 and rep.coboundary_count == 1
    assert rep.cocycle_count == rep.coboundary_count * rep.h1_order()


def test_h1_mixed_structure_module():
    G = cyclic_group(2)
    M = FiniteModule(G, (2, 4), [[[1, 0], [0, 1]], [[1, 0], [0, 3]]])
    rep = h1(G, M)
    bf = enumerate_cocycles_bruteforce(M)
    assert len(bf) == rep.cocycle_count


def test_solver_matches_bruteforce_sweep():
    for G in (cyclic_group(2), cyclic_group(3), cyclic_group(4),
              dihedral_group(3)):
        for d in (2, 3, 4, 5):
            for M in all_unit_actions(G, d):
                rep = h1(G, M, with_representatives=False)
                if M.size() ** G.order <= 4096:
                    assert len(enumerate_cocycles_bruteforce(M)) == \
                        rep.cocycle_count, (G.name, d)


def test_cocycle_consequences():
    # f(identity) = 0 and f(g^-1) = -g^-1 f(g) follow from the condition
    G = cyclic_group(4)
    M = unit_action_module(G, 8, [1, 3, 1, 3])
    space = _get_space(M)
    for f in space.enumerate_cocycles():
        assert f[G.identity] == (0,)
        for g in range(G.order):
            ginv = G.inv(g)
            lhs = f[ginv]
            rhs = tuple((-x) % d for x, d in
                        zip(M.act(ginv, f[g]), M.structure))
            assert lhs == rhs


def test_sah_negation_example():
    C2 = cyclic_group(2)
    M = unit_action_module(C2, 4, [1, 3])
    v = sah_verify(C2, M, 1)
    assert v.passed and v.cocycles_checked == 4
    # both sides equal -2 f(sigma): check on one explicit cocycle
    f = Cochain({0: (0,), 1: (1,)})
    assert is_cocycle(f, M)
    lhs = (M.act(1, f[1])[0] - f[1][0]) % 4
    rhs = (M.act(1, f[1])[0] - f[1][0]) % 4
    assert lhs == rhs == (-2 * f[1][0]) % 4


def test_sah_identity_alpha_trivial():
    C2 = cyclic_group(2)
    M = unit_action_module(C2, 4, [1, 3])
    assert sah_verify(C2, M, 0).passed


def test_sah_c4_on_z8():
    C4 = cyclic_group(4)
    M = unit_action_module(C4, 8, [1, 3, 1, 3])
    assert sah_verify(C4, M, 2).passed


def test_sah_rejects_non_central():
    q8 = quaternion_group()
    M = trivial_module(q8, (4,))
    with pytest.raises(ValueError):
        sah_verify(q8, M, 2)


def test_size_limit():
    G = cyclic_group(8)
    with pytest.raises(SizeLimitError):
        h1(G, trivial_module(G, (1 << 20,)))


def test_delta_check_examples():
    for n, gens, want in [(5, [2], 5), (8, [2], 4), (3, [1], 1)]:
        rep = kummer_delta_check(n, MultSubgroup(gens))
        assert rep.passed and rep.orders() == (want, want)


def test_delta_check_rejects_composite_conductor():
    with pytest.raises(ValueError):
        kummer_delta_check(6, MultSubgroup([2]))


def test_group_json_round_trip():
    d4 = dihedral_group(4)
    assert FiniteGroup.from_json(d4.to_json()).cayley == d4.cayley
