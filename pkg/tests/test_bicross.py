import numpy as np
import pytest
from oracles import brute_based_iso, naive_assoc_failures

from zsfusion.bicross import bicrossed_ring, verify_exact_factorization
from zsfusion.crossact import CrossedActionData, pointed_crossed_action, trivial_crossed_action
from zsfusion.errors import AxiomError, SubringError
from zsfusion.fusring import (find_based_iso, fpdim, group_ring, tambara_yamagami,
                              validate_fusion_ring)
from zsfusion.grp import cyclic_group
from zsfusion.matched import trivial_matched_pair, zappa_szep
from zsfusion.suite import ty_inversion_action


def test_trivial_actions_give_tensor_product_ring():
    C = tambara_yamagami(cyclic_group(2))
    G = cyclic_group(3)
    B = bicrossed_ring(trivial_crossed_action(C, C.meta["grading"], G))
    # (g, a)(g', a') = (gg', a a')
    expected = np.einsum("ghk,abc->gahbkc", group_ring(G).N, C.N).reshape(B.ring.N.shape)
    assert np.array_equal(B.ring.N, expected)


def test_s3_pointed_bicross_is_group_ring_of_s3(s3_pair):
    B = bicrossed_ring(pointed_crossed_action(s3_pair))
    assert B.ring.rank == 6
    target = group_ring(zappa_szep(s3_pair))
    assert find_based_iso(B.ring, target) is not None
    R = B.ring
    assert brute_based_iso(R.N, R.unit, R.dual, target.N, target.unit, target.dual) is not None


def test_pointed_bicross_matches_zs_table_exactly(s3_pair):
    # with pair (g, k) at index g |Gamma| + k both rings use the same labels
    B = bicrossed_ring(pointed_crossed_action(s3_pair))
    assert np.array_equal(B.ring.N, group_ring(zappa_szep(s3_pair)).N)


def test_ty_z3_inversion_bicross():
    d = ty_inversion_action(3)
    B = bicrossed_ring(d)
    assert B.ring.rank == 8
    assert fpdim(B.ring).total == pytest.approx(12.0, abs=1e-9)
    assert naive_assoc_failures(B.ring.N) == []


def test_subrings_of_bicross(s3_pair):
    d = ty_inversion_action(3)
    B = bicrossed_ring(d)
    gsub = B.ring.subring(B.group_labels())
    csub = B.ring.subring(B.base_labels())
    assert np.array_equal(gsub.N, group_ring(d.G).N)
    assert np.array_equal(csub.N, d.C.N)


def test_labels_are_rendered_with_bowtie():
    B = bicrossed_ring(ty_inversion_action(3))
    assert all("⋈" in lab for lab in B.ring.labels)


def test_exact_factorization_passes_on_bicross():
    B = bicrossed_ring(ty_inversion_action(5))
    assert verify_exact_factorization(B.ring, B.group_labels(), B.base_labels()) == []


def test_exact_factorization_z4_fails():
    R = group_ring(cyclic_group(4))
    bad = verify_exact_factorization(R, [0, 2], [0, 2])
    assert any(b["check"] == "A ∩ C = {unit}" for b in bad)


def test_exact_factorization_degenerate():
    R = tambara_yamagami(cyclic_group(3))
    assert verify_exact_factorization(R, [R.unit], range(R.rank)) == []


def test_exact_factorization_needs_subrings():
    R = group_ring(cyclic_group(4))
    with pytest.raises(SubringError):
        verify_exact_factorization(R, [0, 1], [0])


def test_bicross_rejects_invalid_action(s3_pair):
    d = pointed_crossed_action(s3_pair)
    act = d.act.copy()
    act[1, 1] = 1
    with pytest.raises(AxiomError):
        bicrossed_ring(CrossedActionData(d.C, d.mp, d.grading, act))


def test_bicross_valid_with_trivial_matched_pair_direct_product():
    mp = trivial_matched_pair(cyclic_group(2), cyclic_group(3))
    B = bicrossed_ring(pointed_crossed_action(mp))
    assert validate_fusion_ring(B.ring) == []
    assert np.array_equal(B.ring.N, group_ring(zappa_szep(mp)).N)
