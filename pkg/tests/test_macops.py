import pytest

from qtsym.families import macdonald_M
from qtsym.macops import (
    A_eigen,
    A_k_apply,
    A_k_eigen,
    InvalidStep,
    NotOneBoxUp,
    apply_AN,
    apply_DN,
    bc_matrix_coeff,
    pieri_down_coeff,
    pieri_up_coeff,
    pochhammer_u,
    step_evaluate,
    step_family_at,
    step_series_apply,
)
from qtsym.partitions import (
    Partition,
    add_box_positions,
    enumerate_partitions,
    partitions_up_to,
    remove_box_positions,
)
from qtsym.ratfun import SYMBOLIC, parse_ratfun
from qtsym.symfun import (
    NSymPoly,
    SymFun,
    convert,
    dp1,
    inner_product,
    p_multiply,
    restrict,
)

F = SYMBOLIC
one = F.one


def P(*parts):
    return Partition(parts)


def rf(s):
    return parse_ratfun(s)


def M_restricted(lam, N):
    return restrict(macdonald_M(P(*lam)), N)


def test_DN_one_variable_monomial():
    f = NSymPoly(1, {P(3): one})
    coeffs = apply_DN(f)
    assert coeffs[0] == f
    assert coeffs[1] == f.scale(rf("-q^3"))


def test_DN_two_variables_on_constant():
    f = NSymPoly(2, {P(): one})
    coeffs = apply_DN(f)
    # (1-u)(1-u/t) = 1 - (1 + 1/t) u + (1/t) u^2
    assert coeffs[0] == f
    assert coeffs[1] == f.scale(rf("-(1+t)/t"))
    assert coeffs[2] == f.scale(rf("1/t"))


def test_DN_two_variables_on_m1():
    f = NSymPoly(2, {P(1): one})
    coeffs = apply_DN(f)
    assert coeffs[0] == f
    assert coeffs[1] == f.scale(rf("-(q+1/t)"))
    assert coeffs[2] == f.scale(rf("q/t"))


def test_deigen_small_sweep():
    for N in range(1, 4):
        for w in range(0, 5):
            for lam in enumerate_partitions(w, max_length=N):
                f = M_restricted(lam, N)
                coeffs = apply_DN(f)
                padded = list(lam) + [0] * (N - len(lam))
                expect = [rf("1")]
                for i, part in enumerate(padded, start=1):
                    root = rf("q") ** part * rf("t") ** (1 - i)
                    new = [rf("0")] * (len(expect) + 1)
                    for j, c in enumerate(expect):
                        new[j] = new[j] + c
                        new[j + 1] = new[j + 1] - c * root
                    expect = new
                for k in range(N + 1):
                    assert coeffs[k] == f.scale(expect[k]), (N, lam, k)


def test_DN_coefficients_commute():
    # composition of the u-coefficients in both orders, on monomial
    # spanning sets of the symmetric polynomials
    for N, max_w in ((2, 4), (3, 3)):
        for lam in partitions_up_to(max_w, max_length=N):
            f = NSymPoly(N, {Partition(lam): one})
            d = apply_DN(f)
            for a in range(1, N + 1):
                for b in range(a + 1, N + 1):
                    ab = apply_DN(d[b])[a]
                    ba = apply_DN(d[a])[b]
                    assert ab == ba, (N, lam, a, b)


def test_AN_on_m1():
    f = NSymPoly(1, {P(1): one})
    fam = apply_AN(f)
    assert fam.entry(0) == f
    assert fam.entry(1) == f.scale(rf("(1-q)/q"))


def test_AN_on_constant():
    for N in range(1, 4):
        f = NSymPoly(N, {P(): one})
        fam = apply_AN(f)
        assert fam.entry(0) == f
        for k in range(1, N + 1):
            assert fam.entry(k).is_zero()


def test_AN_stability():
    for N in (2, 3):
        for lam in partitions_up_to(3, max_length=N - 1):
            f = restrict(macdonald_M(Partition(lam)), N)
            upper = apply_AN(f)
            lower = apply_AN(f.set_last_zero())
            for k in range(N):
                assert upper.entry(k).set_last_zero() == lower.entry(k), (N, lam, k)
            assert upper.entry(N).set_last_zero().is_zero()


def test_AN_entries_match_stable_eigen_data():
    # on a restricted Macdonald function the renormalised finite-N operator
    # expands with exactly the stable eigenvalue coefficients, padded by zeros
    for N in (2, 3):
        for lam in partitions_up_to(4, max_length=N):
            f = restrict(macdonald_M(Partition(lam)), N)
            fam = apply_AN(f)
            eig = A_k_eigen(Partition(lam))
            for k in range(N + 1):
                expected = eig.entry(k) if k <= len(lam) else None
                if expected is None or not expected:
                    assert fam.entry(k).is_zero(), (lam, N, k)
                else:
                    assert fam.entry(k) == f.scale(expected), (lam, N, k)


def test_lowering_value_at_generic_sample():
    # C at a generic point sends M_(1) to (1-q)/(1-u0) times the constant
    u0 = rf("2")
    got = step_family_at("C", convert(macdonald_M(P(1)), "p"), u0)
    assert got == SymFun("p", {P(): rf("(1-q)/(1-2)")}, 2)


def test_A1_on_p1():
    f = SymFun.generator("p", (1,))
    got = A_k_apply(1, f)
    assert got == SymFun("p", {P(1): rf("(1-q)/q")}, 1)


def test_A2_kills_short_partitions():
    got = A_k_apply(2, convert(macdonald_M(P(1)), "p"))
    assert got.is_zero()


def test_A1_on_constant():
    got = A_k_apply(1, SymFun("p", {P(): one}, 0))
    assert got.is_zero()


def test_A_eigen_values():
    assert A_eigen(P()).at(rf("2")) == one
    e = A_eigen(P(1))
    assert e.at(rf("3")) == rf("(1/q-3)/(1-3)")
    e2 = A_eigen(P(1, 1))
    u0 = rf("2")
    expected = rf("(1/q-2)*(1/q-2/t)/((1-2)*(1-2/t))")
    assert e2.at(u0) == expected


def test_A_k_eigen_small():
    fam = A_k_eigen(P(1))
    assert fam.entries == [one, rf("(1-q)/q")]
    fam0 = A_k_eigen(P())
    assert fam0.entries == [one]
    fam21 = A_k_eigen(P(2, 1))
    assert fam21.entry(1) == rf("(1-q^2)/q^2") + rf("t*(1-q)/q")


def test_A_k_eigen_reconstructs_eigenvalue():
    for lam in partitions_up_to(4):
        fam = A_k_eigen(Partition(lam))
        eig = A_eigen(Partition(lam))
        for u0 in (rf("7"), rf("11")):
            total = F.zero
            for k, c in enumerate(fam.entries):
                total = total + c / pochhammer_u(u0, k, F)
            assert total == eig.at(u0), lam


def test_e1_closed_form():
    for lam in partitions_up_to(5):
        if not lam:
            continue
        fam = A_k_eigen(Partition(lam))
        expected = F.zero
        for i, part in enumerate(Partition(lam), start=1):
            expected = expected + (F.q ** (-part) - one) * F.t ** (i - 1)
        assert fam.entry(1) == expected, lam


def test_theorem_small_sweep():
    for w in range(0, 5):
        for lam in enumerate_partitions(w):
            m = convert(macdonald_M(lam), "p")
            fam = A_k_eigen(lam)
            for k in (1, 2):
                got = A_k_apply(k, m)
                if len(lam) < k:
                    assert got.is_zero(), (lam, k)
                else:
                    assert got == m.scale(fam.entry(k)), (lam, k)


def test_A_k_self_adjoint():
    fs = [
        SymFun("p", {P(2, 1): one, P(1): rf("q")}, 3),
        SymFun("p", {P(3): one, P(1, 1): rf("t")}, 3),
    ]
    for k in (1, 2):
        lhs = inner_product(A_k_apply(k, fs[0]), fs[1])
        rhs = inner_product(fs[0], A_k_apply(k, fs[1]))
        assert lhs == rhs


def test_A_k_commute():
    for w in range(0, 5):
        for lam in enumerate_partitions(w):
            f = convert(SymFun.generator("m", lam), "p")
            for j in (1, 2, 3):
                for k in range(j + 1, 4):
                    jk = A_k_apply(j, A_k_apply(k, f))
                    kj = A_k_apply(k, A_k_apply(j, f))
                    assert jk == kj, (lam, j, k)


def test_pieri_up_examples():
    assert pieri_up_coeff(P(1), P()) == one
    assert pieri_up_coeff(P(1, 1), P(1)) == rf("(1-q)*(1+t)/(1-q*t)")
    assert pieri_up_coeff(P(2), P(1)) == one
    with pytest.raises(NotOneBoxUp):
        pieri_up_coeff(P(2, 2), P(1))


def test_pieri_down_examples():
    assert pieri_down_coeff(P(), P(1)) == one
    assert pieri_down_coeff(P(1), P(2)) == rf("(1+q)*(1-t)/(1-q*t)")
    assert pieri_down_coeff(P(2), P(2, 1)) == one


def test_pieri_up_matches_multiplication():
    p1 = SymFun.generator("p", (1,))
    for mu in partitions_up_to(5):
        prod = p_multiply(p1, convert(macdonald_M(Partition(mu)), "p"))
        expected = SymFun.zero("p", sum(mu) + 1)
        for lam, _ in add_box_positions(Partition(mu)):
            expected = expected + convert(macdonald_M(lam, sum(mu) + 1), "p").scale(
                pieri_up_coeff(lam, mu)
            )
        assert prod == expected, mu


def test_pieri_down_matches_derivative():
    for lam in partitions_up_to(5):
        if not lam:
            continue
        deriv = dp1(macdonald_M(Partition(lam)))
        expected = SymFun.zero("p", sum(lam))
        for mu, _ in remove_box_positions(Partition(lam)):
            expected = expected + convert(macdonald_M(mu, sum(lam)), "p").scale(
                pieri_down_coeff(mu, lam)
            )
        assert deriv == expected, lam


def test_step_B0_multiplies_by_row():
    f = SymFun("p", {P(2): rf("q"), P(): one}, 2)
    got = step_series_apply("B", 0, f)
    expected = p_multiply(SymFun("p", {P(1): rf("1-t")}, 1), f, 3)
    assert got == expected


def test_step_C0_on_p1():
    got = step_series_apply("C", 0, SymFun.generator("p", (1,)))
    assert got == SymFun("p", {P(): rf("1-q")}, 1)


def test_step_C1_kills_degree_one():
    got = step_series_apply("C", 1, convert(macdonald_M(P(1)), "p"))
    assert got.is_zero()


def test_degree_shifts():
    f = convert(macdonald_M(P(2, 1)), "p")
    up = step_series_apply("B", 1, f)
    down = step_series_apply("C", 1, f)
    assert all(sum(k) == 4 for k in up.coeffs)
    assert all(sum(k) == 2 for k in down.coeffs)
    same = A_k_apply(1, f)
    assert all(sum(k) == 3 for k in same.coeffs)


def test_b_c_adjoint():
    fs = SymFun("p", {P(2): one, P(1, 1): rf("q")}, 3)
    gs = SymFun("p", {P(2, 1): one, P(3): rf("t")}, 3)
    for k in range(3):
        lhs = inner_product(step_series_apply("B", k, fs), gs)
        rhs = inner_product(fs, step_series_apply("C", k, gs))
        assert lhs == rhs, k


def test_bc_matrix_coeff_examples():
    u0 = rf("5")
    b = bc_matrix_coeff("B", P(1), P())
    assert b.at(u0) == rf("(1-t)/(1-5)")
    c = bc_matrix_coeff("C", P(1), P())
    assert c.at(u0) == rf("(1-q)/(1-5)")
    b2 = bc_matrix_coeff("B", P(1, 1), P(1))
    expected = (
        rf("(1-q)*(1+t)/(1-q*t)")
        * (rf("1/t") / (one - u0 / F.t))
        * ((one / F.q - u0) / (one - u0))
        * rf("1-t")
    )
    assert b2.at(u0) == expected


def test_step_evaluate_examples():
    ev = step_evaluate("B", P(1), 1)
    assert ev.point == (-1, 0)
    assert ev.partner == P()
    assert ev.coeff == rf("(1-t)*q/(q-1)")
    assert ev.alt_coeff == rf("(1-t)/(q-1)")
    assert ev.coeff / ev.alt_coeff == rf("q")

    ev = step_evaluate("C", P(1), 1)
    assert ev.coeff == rf("-q")

    ev = step_evaluate("B", P(2), 1)
    assert ev.coeff == rf("(1-t)*q^2/(q^2-1)")


def test_step_evaluate_ratio_is_q_power():
    for lam in partitions_up_to(4):
        for _, i in remove_box_positions(Partition(lam)):
            for kind in ("B", "C"):
                ev = step_evaluate(kind, Partition(lam), i)
                assert ev.coeff / ev.alt_coeff == F.q ** lam[i - 1], (lam, i, kind)


def test_step_evaluate_invalid():
    with pytest.raises(InvalidStep):
        step_evaluate("B", P(2, 2), 1)
    with pytest.raises(InvalidStep):
        step_evaluate("B", P(1), 2)


def _m_basis_component(f, lam):
    # coefficient of M_lam when a degree-|lam| element is written in the M basis
    from qtsym.partitions import grevlex_key
    from qtsym.families import macdonald_in_m

    work = dict(convert(f, "m").coeffs)
    out = {}
    for nu in sorted(enumerate_partitions(sum(lam)), key=grevlex_key):
        c = work.get(nu)
        if c is None or not c:
            continue
        out[nu] = c
        for k, v in macdonald_in_m(nu).items():
            s = work.get(k, F.zero) - c * v
            if s:
                work[k] = s
            else:
                work.pop(k, None)
    return out.get(Partition(lam), F.zero)


def test_lowering_family_is_single_term_at_its_point():
    for lam in partitions_up_to(4):
        if not lam:
            continue
        for mu, i in remove_box_positions(Partition(lam)):
            ev = step_evaluate("C", Partition(lam), i)
            u0 = F.q ** (-lam[i - 1]) * F.t ** (i - 1)
            got = step_family_at("C", convert(macdonald_M(Partition(lam)), "p"), u0)
            expected = convert(macdonald_M(mu), "p").scale(ev.coeff)
            assert got == expected, (lam, i)


def test_raising_family_component_matches_coeff():
    # at u = q^(-lam_i) t^(i-1) the M_lam component of the raising family on
    # M_mu equals the step coefficient; other components need not vanish there
    for lam in partitions_up_to(4):
        if not lam:
            continue
        for mu, i in remove_box_positions(Partition(lam)):
            ev = step_evaluate("B", Partition(lam), i)
            u0 = F.q ** (-lam[i - 1]) * F.t ** (i - 1)
            got = step_family_at("B", convert(macdonald_M(mu), "p"), u0)
            assert _m_basis_component(got, Partition(lam)) == ev.coeff, (lam, i)


def test_raising_family_single_term_at_shifted_point():
    # the raising family is exactly single-term at u = q^(-(lam_i - 1)) t^(i-1),
    # whenever the lowered part stays positive
    from qtsym.macops import bc_matrix_coeff

    for lam in partitions_up_to(4):
        if not lam:
            continue
        for mu, i in remove_box_positions(Partition(lam)):
            if lam[i - 1] < 2:
                continue
            u0 = F.q ** (-(lam[i - 1] - 1)) * F.t ** (i - 1)
            got = step_family_at("B", convert(macdonald_M(mu), "p"), u0)
            coeff = bc_matrix_coeff("B", Partition(lam), mu).at(u0)
            expected = convert(macdonald_M(Partition(lam)), "p").scale(coeff)
            assert got == expected, (lam, i)
