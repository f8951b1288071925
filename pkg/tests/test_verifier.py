import pytest

from cypres.cpg import H, abelianization, res_FG
from cypres.errors import DomainError, NotApplicable
from cypres.verifier import (
    LemmaReport,
    ParamDecomposition,
    classification_mismatches,
    classify_case,
    decompose_params,
    expected_rank2,
    minimality_guarantees,
    minimality_reduce,
    res_phi6_G,
    sweep_classify,
    sweep_grid,
    v_reduce,
    verify_case,
    verify_cor_half,
    verify_lemma_grow,
    verify_lemma_lucas,
    verify_lemma_vg1,
    verify_minimality,
)


def admissible(max_n):
    for n in range(6, max_n + 1, 6):
        for m in range(8, n, 6):
            yield n, m


def test_decompose_examples():
    assert decompose_params(18, 8) == ParamDecomposition(18, 8, a=1, s=2, v=1, b=1, r=1, u=1, tau=1, K=6)
    assert decompose_params(12, 8) == ParamDecomposition(12, 8, a=2, s=1, v=1, b=1, r=1, u=1, tau=1, K=6)
    assert decompose_params(30, 8) == ParamDecomposition(30, 8, a=1, s=1, v=5, b=1, r=1, u=1, tau=None, K=6)


@pytest.mark.parametrize("n,m", [(10, 8), (12, 7), (12, 14), (12, 2), (0, 2)])
def test_decompose_rejects(n, m):
    with pytest.raises(DomainError):
        decompose_params(n, m)


def test_decompose_invariants():
    for n, m in admissible(300):
        d = decompose_params(n, m)
        assert n == 2**d.a * 3**d.s * d.v
        assert m - 2 == 2**d.b * 3**d.r * d.u
        assert (d.tau is not None) == (d.u % d.v == 0)


def test_res_phi6_G():
    assert res_phi6_G(12) == 48
    assert res_phi6_G(6) == 12


def test_lucas_examples():
    rep = verify_lemma_lucas(12, 8)
    assert rep.applicable and rep.conclusion_checked
    assert rep.witnesses["2+L_K"] == 20
    assert rep.witnesses["Res(f,G)"] == 240
    assert rep.witnesses["Res(Phi6,G)"] == 48
    rep = verify_lemma_lucas(18, 8)
    assert not rep.applicable
    assert ("a > b", False) in rep.hypotheses
    assert "Res(f,G)" not in rep.witnesses


def test_lucas_range():
    seen = 0
    for n, m in admissible(120):
        rep = verify_lemma_lucas(n, m)
        if rep.applicable:
            seen += 1
            assert rep.conclusion_checked, rep
            assert {"2+L_K", "Res(f,G)"} <= set(rep.witnesses)
    assert seen > 0


def test_cor_half_examples():
    for n in (24, 36):
        rep = verify_cor_half(n)
        assert rep.applicable and rep.conclusion_checked
        assert rep.witnesses["Res(F,G)"] != 1
    rep = verify_cor_half(12)
    assert not rep.applicable
    assert ("n >= 22", False) in rep.hypotheses


def test_cor_half_non_multiple_of_12():
    rep = verify_cor_half(30)  # m = 17 is not 2 mod 6
    assert not rep.applicable


def test_vg1_examples():
    rep = verify_lemma_vg1(30, 8)
    assert rep.applicable and rep.conclusion_checked
    assert rep.witnesses["Res(F,G)"] != 1
    assert not verify_lemma_vg1(12, 8).applicable
    rep = verify_lemma_vg1(30, 26)  # 5 | 25 = m - 1: the proof's linear route applies
    assert rep.witnesses["Res(F,t^v+1)"] == 11 == (2**5 + 1) // 3


def test_vg1_range():
    for n, m in admissible(200):
        rep = verify_lemma_vg1(n, m)
        if rep.applicable:
            assert rep.conclusion_checked, rep


def test_grow_examples():
    rep = verify_lemma_grow(2, 1)
    assert rep.conclusion_checked and rep.witnesses["Res(f,Phi_n)"] == 9
    rep = verify_lemma_grow(2, 2)
    assert rep.conclusion_checked
    assert rep.witnesses["Res(f,Phi_3^s)"] == 19
    assert rep.witnesses["Res(F,G)"] == 19
    rep = verify_lemma_grow(3, 1)
    assert rep.conclusion_checked and rep.witnesses["Res(f,Phi_n)"] > 9
    with pytest.raises(DomainError):
        verify_lemma_grow(1, 1)


def test_minimality_examples():
    assert minimality_reduce(48, 8) == (12, 8)
    assert minimality_reduce(162, 8) == (18, 8)
    with pytest.raises(NotApplicable):
        minimality_reduce(12, 8)
    with pytest.raises(NotApplicable):
        minimality_reduce(30, 8)  # v does not divide u


def test_minimality_third_case():
    # a = b+1 and s = r+1: n = 2^2 * 3^2, m - 2 = 2 * 3
    assert minimality_reduce(36, 8) == (12, 8)


def test_minimality_guarantees_up_to_300():
    applicable = 0
    for n, m in admissible(300):
        rep = verify_minimality(n, m)
        if rep.applicable:
            applicable += 1
            assert rep.conclusion_checked, rep
    assert applicable > 100


def test_minimality_guarantees_detect_bad_output():
    assert not all(ok for _, ok in minimality_guarantees(48, 8, 48, 8))


def test_classify_examples():
    assert classify_case(12, 8) == "case1"
    assert classify_case(18, 8) == "case2"
    assert classify_case(54, 38) == "case4"
    assert classify_case(24, 2) == "divides"
    assert classify_case(30, 8) == "reducible"
    assert classify_case(48, 8) == "reducible"
    with pytest.raises(DomainError):
        classify_case(12, 9)


def test_no_case3_and_closed_forms():
    n = 6
    for a in range(1, 9):
        for s in range(1, 6):
            n = 2**a * 3**s
            if n > 500:
                continue
            for m in range(2, n, 6):
                label = classify_case(n, m)
                assert label != "case3"
                rep = verify_case(n, m)
                if rep.applicable:
                    assert rep.conclusion_checked, (n, m, label)


def test_v_reduce():
    assert v_reduce(30, 26) == (6, 2)
    assert v_reduce(90, 44) == (18, 8)


def test_cor_special_torsion_nonempty():
    for s in (2, 3):
        n = 2 * 3**s
        for m in (2 + n // 3, 2 + 2 * n // 3):
            assert abelianization(H(n, m)).torsion


def test_sweep_small():
    rows = sweep_classify(12, jobs=1)
    pairs = {(r.n, r.m): r.structure for r in rows}
    assert pairs[(6, 2)].torsion == ()
    assert pairs[(12, 8)].torsion == (5,)
    assert {p for p, g in pairs.items() if g.is_free()} == {(6, 2), (12, 2)}
    assert sweep_classify(5, jobs=1) == []
    rows18 = sweep_classify(18, jobs=1)
    assert {(r.n, r.m) for r in rows18 if r.structure.is_free()} == {(6, 2), (12, 2), (18, 2)}
    assert all(r.structure.torsion == (19,) for r in rows18 if (r.n, r.m) in {(18, 8), (18, 14)})


def test_sweep_parallel_is_deterministic():
    assert sweep_grid(24, jobs=2) == sweep_grid(24, jobs=1)


def test_sweep_rejects_bad_bound():
    with pytest.raises(DomainError):
        sweep_grid(0)


def test_sweep120_classification(sweep120):
    assert classification_mismatches(sweep120, 120) == {"rank2": set(), "rank2free": set()}
    rank2 = {(r.n, r.m) for r in sweep120 if r.structure.free_rank == 2}
    assert rank2 == expected_rank2(120)


def test_res_FG_iff_torsion_free(sweep120):
    by_pair = {(r.n, r.m): r.structure for r in sweep120}
    for n, m in admissible(120):
        g = by_pair[(n, m)]
        assert (res_FG(n, m) == 1) == g.is_free()
        assert res_FG(n, m) != 1  # no counterexamples


def test_report_json_shape():
    doc = verify_lemma_lucas(12, 8).to_json()
    assert list(doc) == ["lemma_id", "n", "m", "applicable", "hypotheses", "conclusion_checked", "witnesses"]
    assert all(isinstance(v, str) for v in doc["witnesses"].values())
    assert LemmaReport("x", 1, 1).failed is False
