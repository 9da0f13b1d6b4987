import pytest

from digrep import (Matrix, QQ, Representation, RepresentationError,
                    check_representation, demo_representation,
                    demo_subspace_basis, direct_sum, from_semilinear, hom_rep,
                    lambda_factorization, random_representation,
                    random_semilinear, require_valid, rho_group_form,
                    seeded_rng, sub_quotient, to_semilinear)
from digrep.reps import sign_characters, check_semilinear, SemilinearObject
from digrep.digroup import FiniteGroup

from _instances import sample_pair, sample_semilinear_pair


def test_demo_representation_passes_all_axioms():
    r = demo_representation()
    report = check_representation(r)
    assert report.ok, report.failures()


def test_demo_operator_tables_match_the_worked_values():
    r = demo_representation()
    assert r.rho[(0, 0)] == Matrix.identity(QQ, 2)
    assert r.rho[(1, 1)] == Matrix.identity(QQ, 2).scale(QQ.of(-1))
    assert r.lam[(0, 0)].to_lists() == [[1, 0], [0, 0]]
    assert r.lam[(0, 1)].to_lists() == [[1, 0], [1, 0]]
    assert r.lam[(1, 1)].to_lists() == [[-1, 0], [-1, 0]]


def test_rho_group_form_and_lambda_factorization():
    r = demo_representation()
    rho = rho_group_form(r)
    assert rho[1] == Matrix.identity(QQ, 2).scale(QQ.of(-1))
    left = lambda_factorization(r)
    assert left[0].to_lists() == [[1, 0], [0, 0]]
    assert left[1].to_lists() == [[1, 0], [1, 0]]
    for seed in range(10):
        _, q, _ = sample_pair(seed)
        rho = rho_group_form(q)
        left = lambda_factorization(q)
        for (g, a), m in q.lam.items():
            assert m == left[a] * rho[g]


def test_fault_injection_pinpoints_broken_axioms():
    r = demo_representation()
    bad_lam = dict(r.lam)
    bad_lam[(1, 1)] = Matrix.identity(QQ, 2)
    broken = Representation(r.digroup, 2, bad_lam, r.rho)
    report = check_representation(broken)
    assert not report.ok
    assert "R1" in report.failures() or "R5" in report.failures()

    bad_rho = dict(r.rho)
    bad_rho[(0, 1)] = Matrix.from_rows(QQ, [[1, 0], [0, 2]])
    broken = Representation(r.digroup, 2, r.lam, bad_rho)
    report = check_representation(broken)
    assert "R3" in report.failures()

    singular = {k: Matrix.zeros(QQ, 2, 2) for k in r.rho}
    report = check_representation(Representation(r.digroup, 2, r.lam, singular))
    assert "rho_invertible" in report.failures()


def test_sub_quotient_of_the_demo():
    r = demo_representation()
    w, q, iota, pi = sub_quotient(r, demo_subspace_basis())
    assert (w.dim, q.dim) == (1, 1)
    require_valid(w)
    require_valid(q)
    # the subobject carries the zero left family and the sign right family
    assert w.lam[(0, 1)].is_zero()
    assert w.rho[(1, 0)].to_lists() == [[-1]]
    # the quotient carries the sign character on both families
    assert q.lam[(1, 1)].to_lists() == [[-1]]
    assert q.rho[(1, 1)].to_lists() == [[-1]]
    for x in r.digroup.elements:
        assert r.lam[x] * iota == iota * w.lam[x]
        assert pi * r.lam[x] == q.lam[x] * pi


def test_sub_quotient_rejects_unstable_subspaces():
    r = demo_representation()
    with pytest.raises(RepresentationError):
        sub_quotient(r, [Matrix.column(QQ, [1, 0])])


def test_direct_sum_is_valid_and_block_structured():
    r = demo_representation()
    w, q, _, _ = sub_quotient(r, demo_subspace_basis())
    require_valid(w)
    require_valid(q)
    s = direct_sum(w, q)
    require_valid(s)
    assert s.dim == 2
    for x in r.digroup.elements:
        assert s.lam[x][1, 0] == QQ.of(0)
        assert s.lam[x][0, 1] == QQ.of(0)


def test_hom_rep_dimensions_on_the_demo():
    r = demo_representation()
    w, q, _, _ = sub_quotient(r, demo_subspace_basis())
    require_valid(w)
    require_valid(q)
    assert len(hom_rep(w, w)) == 1
    assert len(hom_rep(q, q)) == 1
    assert len(hom_rep(q, w)) == 0
    assert len(hom_rep(w, q)) == 0
    for f in hom_rep(w, w):
        for x in r.digroup.elements:
            assert f * w.lam[x] == w.lam[x] * f


def test_semilinear_round_trip_is_exact():
    for seed in range(15):
        d, q, w = sample_pair(seed)
        for r in (q, w):
            m = to_semilinear(r)
            back = from_semilinear(m, d)
            assert back.lam == r.lam
            assert back.rho == r.rho


def test_semilinear_axiom_checker():
    d, a, _ = sample_semilinear_pair(3)
    assert check_semilinear(a).ok
    if a.dim:
        bad_t = dict(a.t)
        bad_t[d.group.identity] = Matrix.identity(a.field, a.dim).scale(QQ.of(2))
        broken = SemilinearObject(a.action, a.dim, a.eps, bad_t)
        assert "C1" in check_semilinear(broken).failures()


def test_sign_characters():
    assert len(sign_characters(FiniteGroup.cyclic(1))) == 1
    assert len(sign_characters(FiniteGroup.cyclic(2))) == 2
    assert len(sign_characters(FiniteGroup.cyclic(3))) == 1
    assert len(sign_characters(FiniteGroup.cyclic(6))) == 2
    assert len(sign_characters(FiniteGroup.symmetric3())) == 2


def test_random_generators_always_produce_valid_objects():
    for seed in range(25):
        d, q, w = sample_pair(seed + 500)
        assert check_representation(q).ok
        assert check_representation(w).ok
        rng = seeded_rng(seed)
        m = random_semilinear(d, rng.randint(0, 3), rng)
        assert check_semilinear(m).ok


def test_random_generation_is_deterministic_per_seed():
    d1, q1, w1 = sample_pair(42)
    d2, q2, w2 = sample_pair(42)
    assert q1.lam == q2.lam and q1.rho == q2.rho
    assert w1.lam == w2.lam and w1.rho == w2.rho
