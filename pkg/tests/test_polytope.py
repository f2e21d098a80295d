import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from confblocks.lie import build_root_system, enumerate_level_weights
from confblocks.fusion import fusion_context, rank_genus0
from confblocks.polytope import (
    FaceSpec,
    WeightData,
    enumerate_faces_typeA,
    enumerate_on_face,
    face_from_subsets,
    in_polytope_typeA,
    max_face_degree,
    on_face,
    parabolic_degree,
    to_alcove,
    tw_slack,
)
from confblocks.qschubert import is_pt_product

A1, A2, A3 = (build_root_system(x) for x in ("A1", "A2", "A3"))

SL4_L5 = WeightData(A3, [(4, 1, 0)] * 2 + [(1, 0, 1)] * 4, 5)
SL4_L5_FACE = face_from_subsets(2, 4, [(1, 4)] * 2 + [(3, 4)] * 4)
SL4_L5_LABELLED = face_from_subsets(2, 4, [(2, 3)] * 2 + [(3, 4)] * 4)
SL4_L2 = WeightData(A3, [(0, 0, 2)] * 4 + [(1, 0, 1)] * 2, 2)
SL4_L2_FACE = face_from_subsets(1, 4, [(2,)] + [(3,)] * 5)


def test_weight_data_validation():
    with pytest.raises(ValueError):
        WeightData(A1, [(3,)], 2)
    with pytest.raises(ValueError):
        WeightData(A2, [(1,)], 2)
    with pytest.raises(ValueError):
        WeightData(A2, [(-1, 0)], 2)
    with pytest.raises(ValueError):
        WeightData(A2, [(0, 0)], 0)


def test_alcove_examples():
    assert to_alcove(WeightData(A3, [(0, 0, 0)], 1)) == ((0, 0, 0),)
    (mu,) = to_alcove(WeightData(A1, [(1,)], 2))
    assert mu[0] == Fraction(1, 2)  # theta(mu) for A1 is the single coordinate
    for p in to_alcove(SL4_L5):
        assert all(c >= 0 for c in p) and sum(p) <= 1  # A3 has all marks one


def test_known_slacks():
    assert tw_slack(SL4_L5, SL4_L5_FACE) == 0
    assert parabolic_degree(SL4_L5, SL4_L5_FACE) == 0
    assert tw_slack(SL4_L2, SL4_L2_FACE) == 0
    ex2_l3 = SL4_L2.with_level(3)
    assert tw_slack(ex2_l3, SL4_L2_FACE) == Fraction(1, 3)
    assert parabolic_degree(ex2_l3, SL4_L2_FACE) == -1


def test_level5_data_inside_other_face():
    # the data sits strictly inside the inequality for the {2,3} face
    assert SL4_L5_LABELLED.certified and SL4_L5_LABELLED.degree == 0
    assert tw_slack(SL4_L5, SL4_L5_LABELLED) == Fraction(8, 5)
    assert parabolic_degree(SL4_L5, SL4_L5_LABELLED) == -8


def test_on_face_reports():
    r1 = on_face(SL4_L5, SL4_L5_FACE)
    assert (r1.on_face, r1.certified, r1.degree) == (True, True, 0)
    r2 = on_face(SL4_L2, SL4_L2_FACE)
    assert (r2.on_face, r2.certified, r2.degree) == (True, True, 1)
    r3 = on_face(SL4_L2.with_level(3), SL4_L2_FACE)
    assert not r3.on_face and r3.slack == Fraction(1, 3)
    assert r1.to_json() == {"on_face": True, "slack": "0", "certified": True, "degree": 0}


def test_zero_weights_on_trivial_face():
    wd = WeightData(A3, [(0, 0, 0)] * 3, 1)
    face = FaceSpec(2, ((), (), ()), 0)
    assert parabolic_degree(wd, face) == 0
    assert not on_face(wd, face).certified


def test_face_validation():
    with pytest.raises(ValueError):
        tw_slack(SL4_L5, FaceSpec(2, ((1,),) * 5, 0))
    with pytest.raises(ValueError):
        tw_slack(SL4_L5, FaceSpec(2, ((1,),) * 6, 0))  # s_1 is not in W^P for P = node 2
    with pytest.raises(ValueError):
        tw_slack(SL4_L5, FaceSpec(4, ((),) * 6, 0))
    with pytest.raises(ValueError):
        tw_slack(SL4_L5, FaceSpec(2, ((),) * 6, -1))
    with pytest.raises(ValueError):
        face_from_subsets(2, 4, [(3, 4)] * 3)


def test_uncertified_degree_mismatch():
    face = face_from_subsets(2, 4, [(1, 4)] * 2 + [(3, 4)] * 4, degree=1)
    assert not face.certified


def test_face_json_roundtrip():
    for face in (SL4_L5_FACE, SL4_L2_FACE, FaceSpec(1, ((), (1,)), 0)):
        back = FaceSpec.from_json(face.to_json())
        assert back.words == face.words and back.degree == face.degree and back.node == face.node


@pytest.mark.parametrize("wd,face", [(SL4_L5, SL4_L5_FACE), (SL4_L2, SL4_L2_FACE), (SL4_L5, SL4_L5_LABELLED)])
def test_scaling_invariance(wd, face):
    for n in range(1, 5):
        big = wd.scaled(n)
        assert tw_slack(big, face) == tw_slack(wd, face)
        assert on_face(big, face).on_face == on_face(wd, face).on_face


faces_gr24 = enumerate_faces_typeA(2, 4, 3, 1)


@given(st.sampled_from(faces_gr24), st.integers(1, 3), st.randoms(use_true_random=False))
def test_parabolic_degree_identity(face, level, rnd):
    ws = enumerate_level_weights(A3, level)
    wd = WeightData(A3, [rnd.choice(ws) for _ in range(3)], level)
    assert parabolic_degree(wd, face) == -level * tw_slack(wd, face)


@given(st.sampled_from(faces_gr24), st.integers(1, 3), st.randoms(use_true_random=False))
def test_slack_linear_in_degree(face, level, rnd):
    ws = enumerate_level_weights(A3, level)
    wd = WeightData(A3, [rnd.choice(ws) for _ in range(3)], level)
    shifted = FaceSpec(face.node, face.words, face.degree + 2)
    assert tw_slack(wd, shifted) == tw_slack(wd, face) + 2


def test_enumerate_gr12():
    faces = enumerate_faces_typeA(1, 2, 3, 0)
    assert [f.subsets for f in faces] == [((1,), (2,), (2,)), ((2,), (1,), (2,)), ((2,), (2,), (1,))]
    assert enumerate_faces_typeA(1, 2, 3, 0, ordered=False)[0].subsets == ((1,), (2,), (2,))
    with pytest.raises(ValueError):
        enumerate_faces_typeA(1, 2, 3, -1)


@pytest.mark.parametrize("k,n,pts,d", [(1, 3, 4, 2), (2, 4, 4, 1), (1, 4, 3, 1)])
def test_enumerated_faces_certified(k, n, pts, d):
    faces = enumerate_faces_typeA(k, n, pts, d)
    assert faces
    for f in faces:
        assert f.certified and f.degree <= d
        assert is_pt_product(k, n, f.subsets) == f.degree


def test_max_face_degree():
    assert max_face_degree(1, 2, 3) == 1
    assert max_face_degree(2, 4, 6) == 5
    assert max_face_degree(1, 4, 1) == 0


def test_membership_examples():
    assert in_polytope_typeA(SL4_L2).member
    rep = in_polytope_typeA(WeightData(A1, [(1,), (0,), (0,)], 1))
    assert not rep.member
    assert rep.witness.subsets == ((1,), (2,), (2,)) and rep.witness.degree == 0
    assert rep.slack == Fraction(-1, 2)
    with pytest.raises(NotImplementedError):
        in_polytope_typeA(WeightData(build_root_system("C2"), [(0, 0)], 1))


def test_membership_level5():
    assert in_polytope_typeA(SL4_L5).member


@pytest.mark.parametrize("name,max_level,max_n", [("A1", 3, 6), ("A2", 2, 4), ("A3", 1, 4)])
def test_positive_rank_implies_membership(name, max_level, max_n):
    rs = build_root_system(name)
    rng = random.Random(name)
    for level in range(1, max_level + 1):
        ctx = fusion_context(rs, level)
        ws = enumerate_level_weights(rs, level)
        for n in range(1, max_n + 1):
            for _ in range(6):
                data = [rng.choice(ws) for _ in range(n)]
                wd = WeightData(rs, data, level)
                if rank_genus0(ctx, data).rank > 0:
                    assert in_polytope_typeA(wd).member
                else:
                    # rank zero data may still be a member; the witness, if any, is violated
                    rep = in_polytope_typeA(wd)
                    if not rep.member:
                        assert tw_slack(wd, rep.witness) < 0


def test_enumerate_on_face():
    found = list(enumerate_on_face(A3, SL4_L2_FACE, 2, canonical=False))
    assert all(tw_slack(wd, SL4_L2_FACE) == 0 for wd in found)
    assert SL4_L2.weights in {wd.weights for wd in found}
    # brute force over a small face
    face = enumerate_faces_typeA(1, 3, 3, 0)[0]
    ws = enumerate_level_weights(A2, 2)
    brute = {w for w in itertools.product(ws, repeat=3)
             if tw_slack(WeightData(A2, w, 2), face) == 0}
    assert {wd.weights for wd in enumerate_on_face(A2, face, 2, canonical=False)} == brute
    canon = {wd.weights for wd in enumerate_on_face(A2, face, 2)}
    assert canon <= brute and len(canon) <= len(brute)
