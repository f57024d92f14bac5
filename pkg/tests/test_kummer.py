import random
from fractions import Fraction

import pytest

from thumbtack.cyclotomic import cyclotomic_field
from thumbtack.cycfactor import nth_root_in_cyclotomic
from thumbtack.errors import DependentGeneratorsError
from thumbtack.kummer import (KummerLevel, component_table,
                              cyclotomic_power_membership, descent_exponent,
                              geometric_rho_image, horizontal_certificate,
                              injectivity_profile, kummer_degree,
                              relation_lattice, relation_lattice_enumerated,
                              rho_image, sah_descent_check,
                              vertical_certificate)
from thumbtack.multgroup import (MultSubgroup, independence_check,
                                 parse_function_field)
from thumbtack.zlattice import orthogonal_complement_mod


def test_level_validation():
    with pytest.raises(ValueError):
        KummerLevel(4, 1)
    with pytest.raises(ValueError):
        KummerLevel(3, 0)
    assert KummerLevel(3, 2).conductor == 9


# -- power membership ---------------------------------------------------

def test_membership_examples():
    assert cyclotomic_power_membership(2, 1, KummerLevel(2, 3)) is True
    assert cyclotomic_power_membership(2, 2, KummerLevel(2, 3)) is False
    assert cyclotomic_power_membership(-4, 2, KummerLevel(2, 2)) is True


def test_membership_odd_prime_fast_path():
    lvl = KummerLevel(3, 2)
    assert cyclotomic_power_membership(8, 1, lvl) is False
    assert cyclotomic_power_membership(Fraction(27, 8), 1, lvl) is False
    assert cyclotomic_power_membership(Fraction(27, 64), 1, lvl) is True
    assert cyclotomic_power_membership(-27, 1, lvl) is True  # sign is free


def test_membership_force_oracle_matches_fast_path():
    cases = [(2, 1, 2, 3), (2, 2, 2, 3), (-4, 2, 2, 2), (3, 1, 3, 1),
             (-8, 1, 2, 3), (4, 2, 2, 2), (16, 2, 2, 2)]
    for a, j, l, m in cases:
        lvl = KummerLevel(l, m)
        fast = cyclotomic_power_membership(a, j, lvl)
        oracle = cyclotomic_power_membership(a, j, lvl, force_oracle=True)
        assert fast == oracle, (a, j, l, m)


def test_fast_path_agrees_with_oracle_sweep():
    # every combination at small conductors, both routes
    values = [1, -1, 2, -2, 3, -3, 4, -4, 6, -6, 8, -8]
    cases = []
    for l, m in [(3, 1), (3, 2), (5, 1), (7, 1)]:
        if l ** m <= 9:
            cases.append((l, m))
    for l, m in [(2, 1), (2, 2), (2, 3), (2, 4)]:
        if l ** m <= 16:
            cases.append((l, m))
    for l, m in cases:
        lvl = KummerLevel(l, m)
        F = cyclotomic_field(l ** m)
        for a in values:
            for j in range(1, m + 1):
                fast = cyclotomic_power_membership(a, j, lvl)
                ok, _ = nth_root_in_cyclotomic(a, l ** j, F)
                assert fast == ok, (a, j, l, m)


def test_component_tables_against_exhaustive_oracle():
    for m, j in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]:
        tab = component_table(m, j)
        F = cyclotomic_field(2 ** m)
        n = 2 ** j
        for s in (0, 1):
            for t in range(n):
                ok, _ = nth_root_in_cyclotomic((-1) ** s * 2 ** t, n, F)
                assert ((s, t) in tab) == ok, (m, j, s, t)


def test_known_table_values():
    assert component_table(2, 2) == {(0, 0), (1, 2)}    # -4 = (1+i)^4
    assert component_table(3, 3) == {(0, 0), (0, 4)}    # 2^4 = sqrt(2)^8
    assert component_table(1, 1) == {(0, 0)}


# -- relation lattices, degrees, images ----------------------------------

def test_relation_lattice_examples():
    assert relation_lattice(MultSubgroup([2, 3]),
                            KummerLevel(5, 1)).subgroup.is_trivial()
    r = relation_lattice(MultSubgroup([2]), KummerLevel(2, 3))
    assert sorted(e[0] for e in r.subgroup.elements()) == [0, 4]
    assert relation_lattice(MultSubgroup([2]),
                            KummerLevel(2, 2)).subgroup.is_trivial()


def test_relation_lattice_rejects_dependent():
    with pytest.raises(DependentGeneratorsError) as exc:
        relation_lattice(MultSubgroup([2, 4]), KummerLevel(3, 1))
    assert exc.value.witness == [2, -1]


def test_relation_lattice_matches_enumerated_oracle():
    cases = [([2], 2, 2), ([2], 2, 3), ([2, 3], 3, 1), ([-2], 2, 2),
             ([6], 2, 2), ([2], 5, 1), ([12], 2, 3), ([-6], 2, 3)]
    for gens, l, m in cases:
        gamma = MultSubgroup(gens)
        lvl = KummerLevel(l, m)
        fast = relation_lattice(gamma, lvl)
        slow = relation_lattice_enumerated(gamma, lvl)
        assert fast.subgroup == slow.subgroup, (gens, l, m)


def test_kummer_degree_examples():
    assert kummer_degree(MultSubgroup([2]), KummerLevel(3, 1)) == 3
    assert kummer_degree(MultSubgroup([2]), KummerLevel(2, 3)) == 4
    assert kummer_degree(MultSubgroup([2, 3]), KummerLevel(5, 2)) == 625


def test_rho_image_examples():
    img = rho_image(MultSubgroup([2, 3]), KummerLevel(5, 1))
    assert img.image.is_full() and img.index == 1
    img = rho_image(MultSubgroup([2]), KummerLevel(2, 3))
    assert img.index == 2
    assert sorted(e[0] for e in img.image.elements()) == [0, 2, 4, 6]
    img = rho_image(MultSubgroup([2]), KummerLevel(2, 1))
    assert img.image.is_full() and img.index == 1


def test_duality_and_tower_on_random_sweep():
    rng = random.Random(77)
    pool = [2, 3, 5, 6, 10, 12, -2, -3, 15, 7]
    for _ in range(25):
        gens = rng.sample(pool, k=rng.randint(1, 2))
        gamma = MultSubgroup(gens)
        if not independence_check(gamma).independent:
            continue
        l = rng.choice([2, 3, 5])
        m = rng.randint(1, 3)
        lvl = KummerLevel(l, m)
        rel = relation_lattice(gamma, lvl)
        img = rho_image(gamma, lvl)
        q = l ** m
        assert img.image.order() * rel.subgroup.order() == q ** gamma.rank
        assert orthogonal_complement_mod(img.image) == rel.subgroup
        if m > 1:
            below = rho_image(gamma, KummerLevel(l, m - 1))
            reduced = img.image.reduce_mod(l ** (m - 1))
            assert reduced.issubset(below.image)
        d1 = kummer_degree(gamma, lvl)
        d2 = kummer_degree(gamma, KummerLevel(l, m + 1))
        assert d2 % d1 == 0 and (d1 * l ** gamma.rank) % d2 == 0


# -- certificates ---------------------------------------------------------

def test_horizontal_examples():
    rep = horizontal_certificate(MultSubgroup([2, 3]), range(3, 14), 2)
    assert rep.division_index == 2
    assert rep.all_coprime_full() and not rep.exceptional_primes()
    rep = horizontal_certificate(MultSubgroup([2]), [2], 3)
    e = rep.entries[0]
    assert not e.full and e.first_failure_m == 3 and e.witness == [4]
    # coprimality is sufficient, not necessary
    rep = horizontal_certificate(MultSubgroup([4]), [3], 2)
    assert rep.entries[0].full and not rep.entries[0].coprime_to_threshold


def test_vertical_examples():
    cert = vertical_certificate(MultSubgroup([2]), 2, 5)
    assert [idx for _, _, idx in cert.levels] == [1, 1, 2, 2, 2]
    assert cert.stabilized and cert.limit_divisors == [2]
    cert = vertical_certificate(MultSubgroup([2]), 3, 4)
    assert all(idx == 1 for _, _, idx in cert.levels)
    assert cert.stabilized and cert.limit_divisors == [1]
    cert = vertical_certificate(MultSubgroup([2, 3]), 2, 4)
    assert cert.stabilized
    assert all(d >= 1 for d in cert.limit_divisors)


def test_vertical_inconclusive_is_not_failure():
    cert = vertical_certificate(MultSubgroup([2]), 2, 1)
    assert not cert.stabilized and cert.limit_divisors is None


# -- descent ---------------------------------------------------------------

def test_descent_exponent():
    assert descent_exponent(2) == 2
    assert descent_exponent(3) == 3
    assert descent_exponent(5) == 5
    # l + 1 is a unit at l: the root-raising automorphism exists
    for l in (2, 3, 5):
        assert (l + 1) % l != 0


def test_sah_descent_minus_four():
    res = sah_descent_check(-4, KummerLevel(2, 2))
    assert res.hypothesis_holds
    assert res.witness.kappa == 2 and res.witness.c == 2
    assert res.witness.c ** 4 == Fraction(16) == Fraction(-4) ** 2


def test_sah_descent_hypothesis_fails():
    res = sah_descent_check(2, KummerLevel(2, 1))
    assert not res.hypothesis_holds and res.witness is None


def test_sah_descent_fourth_power():
    res = sah_descent_check(16, KummerLevel(2, 2))
    assert res.hypothesis_holds and res.witness.c == 4
    assert Fraction(4) ** 4 == 256 == Fraction(16) ** 2


def test_sah_descent_odd_prime_negative():
    res = sah_descent_check(-27, KummerLevel(3, 1))
    assert res.hypothesis_holds and res.witness.c == -3


def test_uncorrected_exponent_fails_on_minus_four():
    # (-4)^3 < 0 cannot be a 4th power in Q, so the shift by one matters
    assert Fraction(-4) ** 3 == -64
    from thumbtack.cycfactor import _rational_nth_root
    assert _rational_nth_root(Fraction(-64), 4) is None


# -- injectivity ------------------------------------------------------------

def test_injectivity_examples():
    prof = injectivity_profile(2, 3, 4)
    assert prof.degrees == [3, 9, 27, 81]
    assert prof.strictly_increasing_from == 1 and prof.nontrivial()
    prof = injectivity_profile(2, 2, 4)
    assert prof.degrees == [2, 4, 4, 8]
    assert prof.strictly_increasing_from == 3
    with pytest.raises(ValueError):
        injectivity_profile(1, 3, 3)
    with pytest.raises(ValueError):
        injectivity_profile(-1, 3, 3)


# -- geometric ---------------------------------------------------------------

def test_geometric_examples():
    elems = [parse_function_field("t"), parse_function_field("t+1")]
    img = geometric_rho_image(elems, KummerLevel(2, 3))
    assert img.image.is_full()
    with pytest.raises(DependentGeneratorsError) as exc:
        geometric_rho_image([parse_function_field("t^2"),
                             parse_function_field("t")], KummerLevel(2, 1))
    assert exc.value.witness == [1, -2]
    img = geometric_rho_image([parse_function_field("2t")], KummerLevel(5, 2))
    assert img.image.is_full()


def test_geometric_rejects_constants():
    with pytest.raises(ValueError):
        geometric_rho_image([parse_function_field("3/2")], KummerLevel(2, 1))


def test_geometric_unsaturated_tuple_open_but_not_full():
    # t^2 alone is independent, yet its level-4 image has index 2: the
    # openness statement allows exactly this
    img = geometric_rho_image([parse_function_field("t^2")],
                              KummerLevel(2, 2))
    assert img.index == 2
