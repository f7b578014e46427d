import pytest

from selfdual_forge import gf2
from selfdual_forge.code import is_self_dual
from selfdual_forge.fixedpart import (
    IntegrityError,
    SPLIT_FIXED_COLS,
    check_split_stabilizer_order,
    cluster_rule_ok,
    cluster_split_predicate,
    d12_split_matrix,
    duad_cluster_code,
    exclusion_report,
    f_candidates,
    find_cluster,
    gpp_generators,
    gpp_group,
    mu_candidate_index,
    mu_transversal,
    pi_candidates,
    preserves_split_code,
    six_duads,
    two_duads_plus_hamming,
)
from selfdual_forge.perms import compose, identity, inverse, parse_cycles


def test_three_candidates_are_self_dual():
    for cand in pi_candidates():
        assert is_self_dual(cand.code), cand.name


def test_split_matrix_self_dual_rank6():
    g = d12_split_matrix()
    assert g.k == 6 and is_self_dual(g)


def test_split_matrix_is_cluster_code():
    # equivalent to the standard cluster code: same weight distribution and
    # a recoverable duad partition
    duads = find_cluster(d12_split_matrix())
    assert len(duads) == 6
    # tail columns 8..11 land in four different duads
    tail_duads = [next(d for d in duads if c in d) for c in SPLIT_FIXED_COLS]
    assert len(set(tail_duads)) == 4


def test_standard_cluster_code_duads():
    cand = duad_cluster_code()
    assert find_cluster(cand.code) == cand.duads
    wd = {}
    for w in gf2.span(cand.code.rows):
        wd[gf2.wt(w)] = wd.get(gf2.wt(w), 0) + 1
    assert wd == {0: 1, 4: 15, 6: 32, 8: 15, 12: 1}


def test_six_duads_and_hamming_have_no_cluster():
    for cand in (six_duads(), two_duads_plus_hamming()):
        with pytest.raises(ValueError):
            find_cluster(cand.code)


def test_split_matrix_weight4_words_keep_two_cyclic_coords():
    assert cluster_rule_ok(d12_split_matrix(), SPLIT_FIXED_COLS)
    assert not cluster_rule_ok(six_duads().code, (0, 1, 2, 3))


def test_gpp_closure_order_is_96_not_420():
    assert len(gpp_group()) == 96
    with pytest.raises(IntegrityError, match="96"):
        check_split_stabilizer_order()


def test_gpp_generators_preserve_split_code():
    for g in gpp_generators():
        assert preserves_split_code(g)
    for g in list(gpp_group())[:20]:
        assert preserves_split_code(g)


def test_identity_in_gpp():
    assert identity(8) in gpp_group()


def test_mu_transversal_covers_s8():
    reps = mu_transversal()
    assert len(reps) == 420
    assert reps[0] == identity(8)
    group = gpp_group()
    covered = set()
    for rep in reps:
        cs = {compose(rep, g) for g in group}
        assert not (covered & cs)
        covered |= cs
    assert len(covered) == 40320


def test_non_stabilizer_mu_changes_the_code():
    mu = parse_cycles("(2,3,5)(4,8,6,7)", 8)
    assert not preserves_split_code(mu)
    assert mu_candidate_index(mu) != 0


def test_f_candidates_identity_reproduces_split_matrix():
    part = f_candidates(identity(8))
    assert part.source.same_code(d12_split_matrix())


def test_f_candidates_all_self_dual_sample():
    reps = mu_transversal()
    for mu in reps[::40]:
        part = f_candidates(mu)
        assert is_self_dual(part.source)
        assert min(gf2.wt(r) for r in part.rows) >= 14


def test_f_candidates_rejects_bad_mu():
    with pytest.raises(ValueError):
        f_candidates((0, 1, 2, 3, 4, 5, 6, 6))


def test_exclusion_report_verdicts():
    report = exclusion_report()
    assert report.verdicts == {
        "6i2 admits no split": True,
        "2i2+h8 admits no split": True,
        "2i2+h8 five canonical splits all fail": True,
        "cluster splits pass exactly": True,
    }
    assert report.six_duads.assignments_checked == 495
    # four tail points in distinct duads still leave a weight-10 expansion
    assert report.six_duads.worst_min_weight == 10
    # two tail points inside one duad leave that duad word at weight 2
    assert report.six_duads.best_min_weight == 2


def test_cluster_passing_assignments_match_duad_predicate():
    report = exclusion_report()
    passing = set(report.cluster.passing_assignments)
    from itertools import combinations

    for fixed in combinations(range(12), 4):
        assert (fixed in passing) == cluster_split_predicate(fixed)


def test_exclusion_report_deterministic():
    assert exclusion_report() == exclusion_report()
