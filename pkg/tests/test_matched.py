import numpy as np
import pytest
from oracles import by_name, tables_isomorphic

from zsfusion.errors import AxiomError, FactorizationError, FormatError
from zsfusion.grp import cyclic_group, direct_product, exact_factorizations, make_subgroup
from zsfusion.matched import (MatchedPair, derive_matched_pair, product_map_is_isomorphism,
                              trivial_matched_pair, verify_matched_pair, zappa_szep)


def test_direct_product_gives_trivial_actions():
    S = direct_product(cyclic_group(2), cyclic_group(3))
    G = make_subgroup(S, [0, 3])          # (1, 0)
    K = make_subgroup(S, [0, 1, 2])       # (0, *)
    mp = derive_matched_pair(S, G, K)
    assert mp.is_trivial()


def test_s3_actions(S3, s3_pair):
    # positions inside the factors follow the sorted element lists
    a = by_name(S3, "231")
    K = sorted([S3.identity, a, S3.mul(a, a)])
    k, k2 = K.index(a), K.index(S3.mul(a, a))
    t = 1
    # a·t = t·a² in S3, so a ▶ t = t and a ◀ t = a²
    assert S3.mul(a, by_name(S3, "213")) == S3.mul(by_name(S3, "213"), S3.mul(a, a))
    assert s3_pair.left(k, t) == t
    assert s3_pair.right(k, t) == k2


def test_s3_pair_is_valid(s3_pair):
    assert verify_matched_pair(s3_pair) == []


def test_s3_corrupted_right_action_is_caught(s3_pair):
    ract = s3_pair.ract.copy()
    # overwrite a ◀ t with a for one non-identity a only
    ract[1, 1] = 1
    bad = MatchedPair(s3_pair.G, s3_pair.Gamma, s3_pair.lact, ract)
    report = verify_matched_pair(bad)
    compat = [r for r in report if r["axiom"].startswith("compatibility 1")]
    assert compat
    k, t, g = compat[0]["witness"]
    K = bad.Gamma
    lhs = bad.right(K.mul(k, t), g)
    rhs = K.mul(bad.right(k, bad.left(t, g)), bad.right(t, g))
    assert lhs != rhs


def test_s4_pair_has_nontrivial_actions(S4):
    c = by_name(S4, "2341")
    G = make_subgroup(S4, [S4.identity, c, S4.mul(c, c), S4.prod(c, c, c)])
    K = make_subgroup(S4, [x for x in range(24) if S4.names[x][3] == "4"])
    mp = derive_matched_pair(S4, G, K)
    assert verify_matched_pair(mp) == []
    k_idx = np.arange(K.order)[:, None]
    g_idx = np.arange(G.order)[None, :]
    assert not (mp.lact == g_idx).all()
    assert not (mp.ract == k_idx).all()
    Z = zappa_szep(mp)
    assert product_map_is_isomorphism(S4, G, K, Z)


def test_derive_rejects_non_factorization(S3):
    a = by_name(S3, "231")
    K = make_subgroup(S3, [S3.identity, a, S3.mul(a, a)])
    with pytest.raises(FactorizationError) as err:
        derive_matched_pair(S3, K, K)
    assert len(err.value.witness) == 3


def test_trivial_pair_is_valid_and_zs_is_direct_product():
    mp = trivial_matched_pair(cyclic_group(2), cyclic_group(3))
    assert verify_matched_pair(mp) == []
    Z = zappa_szep(mp)
    assert Z.n == 6 and Z.is_abelian()


def test_zs_of_s3_pair_is_s3(S3, s3_pair):
    Z = zappa_szep(s3_pair)
    assert not Z.is_abelian()
    assert tables_isomorphic(Z.table, S3.table)


def test_zs_identity_is_pair_of_identities(s3_pair):
    Z = zappa_szep(s3_pair)
    assert Z.identity == s3_pair.pair_index(s3_pair.G.identity, s3_pair.Gamma.identity)


def test_zs_rejects_invalid_pair(s3_pair):
    ract = s3_pair.ract.copy()
    ract[1, 1] = 1
    with pytest.raises(AxiomError):
        zappa_szep(MatchedPair(s3_pair.G, s3_pair.Gamma, s3_pair.lact, ract))


def test_shape_checks(s3_pair):
    with pytest.raises(FormatError):
        MatchedPair(s3_pair.G, s3_pair.Gamma, s3_pair.lact[:2], s3_pair.ract)
    with pytest.raises(FormatError):
        MatchedPair(s3_pair.G, s3_pair.Gamma, s3_pair.lact + 5, s3_pair.ract)


def test_unit_conditions_are_checked(s3_pair):
    lact = s3_pair.lact.copy()
    lact[1, s3_pair.G.identity] = 1
    report = verify_matched_pair(MatchedPair(s3_pair.G, s3_pair.Gamma, lact, s3_pair.ract))
    assert any(r["axiom"] == "unit: k ▶ e = e" for r in report)


def test_round_trip_d8_q8(groups):
    for name in ("D8", "Q8"):
        S = groups[name]
        for G, K in exact_factorizations(S):
            mp = derive_matched_pair(S, G, K)
            assert verify_matched_pair(mp) == []
            assert product_map_is_isomorphism(S, G, K, zappa_szep(mp))
