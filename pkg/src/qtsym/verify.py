"""Exact certification of the identities tied to the operator families:
reproducing-kernel lemma, Hall-Littlewood Cauchy identity, Green
orthogonality, finite-N eigen-equations, the stable-operator expansion,
the q-commutator step relations, the finite-N symbol identity, and the
vanishing of the alternant combination behind it.

Every check is a pure function returning a CheckReport; the suite runner
serialises reports as JSON lines with a trailing summary object.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from . import families, macops, symfun
from .families import (
    green_table,
    hall_littlewood,
    hl_alternant,
    macdonald_M,
    morris_phi,
)
from .macops import (
    A_eigen,
    A_k_apply,
    A_k_eigen,
    PoleAtSample,
    pochhammer_u,
    step_series_apply,
)
from .partitions import (
    LengthExceedsN,
    Partition,
    add_box_positions,
    enumerate_partitions,
    remove_box_positions,
    stats,
    t_factors,
)
from .ratfun import SYMBOLIC
from .symfun import (
    BiSymFun,
    NSymPoly,
    SymFun,
    XPoly,
    convert,
    divide_by_vandermonde,
    expand_x,
    restrict,
)


@dataclass
class CheckReport:
    name: str
    parameters: dict
    status: str  # "pass" or "fail"
    witness: str | None = None
    elapsed: float = 0.0

    def passed(self):
        return self.status == "pass"

    def to_json_dict(self):
        return {
            "name": self.name,
            "parameters": {k: str(v) for k, v in sorted(self.parameters.items())},
            "status": self.status,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
        }


def _finish(name, params, t0, ok, witness=None):
    if ok:
        witness = None
    elif witness is None:
        witness = "mismatch"
    return CheckReport(
        name=name,
        parameters=params,
        status="pass" if ok else "fail",
        witness=witness,
        elapsed=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# reproducing kernels

def _diagonal_kernel(degree_bound, weight_fn, field):
    # truncated exp( sum_n weight(n) p_n (x) p_n (y) )
    out = BiSymFun.one(degree_bound, field)
    empty = Partition()
    for n in range(1, degree_bound + 1):
        a = weight_fn(n)
        coeffs = {(empty, empty): field.one}
        term = field.one
        for m in range(1, degree_bound // n + 1):
            term = term * a / field.from_int(m)
            key = Partition([n] * m)
            coeffs[(key, key)] = term
        out = out * BiSymFun(coeffs, degree_bound, field)
    return out


def kernel_pi(degree_bound, field=SYMBOLIC):
    """Truncation of the reproducing kernel for the (q,t) inner product."""
    return _diagonal_kernel(
        degree_bound,
        lambda n: (field.one - field.t ** n) / (field.one - field.q ** n) / field.from_int(n),
        field,
    )


def hl_kernel(degree_bound, field=SYMBOLIC):
    """Truncation of the Hall-Littlewood Cauchy kernel."""
    return _diagonal_kernel(
        degree_bound,
        lambda n: (field.one - field.t ** n) / field.from_int(n),
        field,
    )


def check_kernel_lemma(f, degree_bound, label=None, field=SYMBOLIC):
    """f*(Pi)/Pi = f(y), in truncation to the given order."""
    t0 = time.perf_counter()
    params = {"f": label or repr(f), "degree_bound": degree_bound}
    k = f.max_degree()
    big = kernel_pi(degree_bound + k, field)
    quotient = big.adjoint_x(f) * big.series_inverse()
    fp = convert(f, "p")
    empty = Partition()
    expected = BiSymFun({(empty, mu): c for mu, c in fp.coeffs.items()}, degree_bound + k, field)
    ok = quotient == expected
    witness = None
    if not ok:
        for key in sorted(set(quotient.coeffs) | set(expected.coeffs)):
            if quotient.coeffs.get(key) != expected.coeffs.get(key):
                witness = "first mismatch at p%s (x) p%s" % (tuple(key[0]), tuple(key[1]))
                break
    return _finish("kernel_lemma", params, t0, ok, witness)


def check_hl_cauchy(degree, field=SYMBOLIC):
    """Degree component of the Cauchy kernel equals sum of Q (x) P."""
    t0 = time.perf_counter()
    params = {"degree": degree}
    lhs = hl_kernel(degree, field).component(degree, degree)
    coeffs = {}
    for lam in enumerate_partitions(degree):
        qp = convert(hall_littlewood(lam, "Q", field=field), "p")
        pp = convert(hall_littlewood(lam, "P", field=field), "p")
        for a, ca in qp.coeffs.items():
            for b, cb in pp.coeffs.items():
                key = (a, b)
                s = coeffs.get(key, field.zero) + ca * cb
                if s:
                    coeffs[key] = s
                else:
                    del coeffs[key]
    rhs = BiSymFun(coeffs, degree, field)
    ok = lhs == rhs
    witness = None
    if not ok:
        for key in sorted(set(lhs.coeffs) | set(rhs.coeffs)):
            if lhs.coeffs.get(key) != rhs.coeffs.get(key):
                witness = "p%s (x) p%s" % (tuple(key[0]), tuple(key[1]))
                break
    return _finish("hl_cauchy", params, t0, ok, witness)


# ---------------------------------------------------------------------------
# Green orthogonality

def check_green(degree, field=SYMBOLIC):
    t0 = time.perf_counter()
    params = {"degree": degree}
    gt = green_table(degree, field)
    lams = enumerate_partitions(degree)
    z_t = {lam: t_factors(lam, field=field).z_t for lam in lams}
    b = {lam: t_factors(lam, field=field).b for lam in lams}
    for mu in lams:
        for nu in lams:
            total = field.zero
            for lam in lams:
                total = total + gt.x(lam, mu) * gt.x(lam, nu) / z_t[lam]
            expected = b[mu] if mu == nu else field.zero
            if total != expected:
                return _finish("green", params, t0, False,
                               "orthogonality fails at mu=%s nu=%s" % (tuple(mu), tuple(nu)))
    for mu in lams:
        got = SymFun("p", {lam: gt.x(lam, mu) / z_t[lam] for lam in lams}, degree, field)
        expected = convert(hall_littlewood(mu, "Q", field=field), "p")
        if got != expected:
            return _finish("green", params, t0, False,
                           "row expansion fails at mu=%s" % (tuple(mu),))
    if field.is_symbolic:
        for mu in lams:
            n_mu = stats(mu).n_stat
            top = -1
            for lam in lams:
                x = gt.x(lam, mu)
                if not x:
                    continue
                if not (x.den == 1 and x.num.max_deg_q() == 0):
                    return _finish("green", params, t0, False,
                                   "X[%s,%s] leaves Z[t]" % (tuple(lam), tuple(mu)))
                d = x.num.max_deg_t()
                top = max(top, d)
                if d == n_mu and x.num.terms.get((0, n_mu)) != 1:
                    return _finish("green", params, t0, False,
                                   "X[%s,%s] is not monic" % (tuple(lam), tuple(mu)))
            if top != n_mu:
                return _finish("green", params, t0, False,
                               "max t-degree in column %s is %d, not %d" % (tuple(mu), top, n_mu))
        # characters at t = 0: plain orthogonality of the symmetric group
        for mu in lams:
            for nu in lams:
                total = Fraction(0)
                for lam in lams:
                    a = gt.x(lam, mu).specialize(t=0)
                    c = gt.x(lam, nu).specialize(t=0)
                    total += Fraction(a.num.const_value(), a.den.const_value()) * Fraction(
                        c.num.const_value(), c.den.const_value()
                    ) / stats(lam).z
                if total != (1 if mu == nu else 0):
                    return _finish("green", params, t0, False,
                                   "character orthogonality fails at mu=%s nu=%s"
                                   % (tuple(mu), tuple(nu)))
    return _finish("green", params, t0, True)


# ---------------------------------------------------------------------------
# finite-N eigen-equations and the stable-operator expansion

def check_deigen(N, lam, field=SYMBOLIC):
    t0 = time.perf_counter()
    lam = Partition(lam)
    params = {"N": N, "lam": tuple(lam)}
    f = restrict(macdonald_M(lam, field=field), N)
    coeffs = macops.apply_DN(f, N)
    padded = list(lam) + [0] * (N - len(lam))
    expect = [field.one]
    for i, part in enumerate(padded, start=1):
        root = field.q ** part * field.t ** (1 - i)
        new = [field.zero] * (len(expect) + 1)
        for j, c in enumerate(expect):
            new[j] = new[j] + c
            new[j + 1] = new[j + 1] - c * root
        expect = new
    for k in range(N + 1):
        if coeffs[k] != f.scale(expect[k]):
            return _finish("deigen", params, t0, False, "u-power %d differs" % k)
    return _finish("deigen", params, t0, True)


def check_theorem_basic(k, lam, field=SYMBOLIC):
    t0 = time.perf_counter()
    lam = Partition(lam)
    params = {"k": k, "lam": tuple(lam)}
    m = convert(macdonald_M(lam, field=field), "p")
    got = A_k_apply(k, m)
    if len(lam) < k:
        ok = got.is_zero()
        return _finish("theorem_basic", params, t0, ok, "expected zero image")
    fam = A_k_eigen(lam, field)
    expected = m.scale(fam.entry(k))
    ok = got == expected
    return _finish("theorem_basic", params, t0, ok, "eigen-equation fails")


def check_corollary(k, mu, u_samples, field=SYMBOLIC):
    """q-commutator step relations at integer u samples, both directions."""
    t0 = time.perf_counter()
    mu = Partition(mu)
    params = {"k": k, "mu": tuple(mu), "u_samples": tuple(u_samples)}
    m_mu = convert(macdonald_M(mu, field=field), "p")
    bound = sum(mu) + 1
    eig = {}

    def a_val(nu, u0):
        if (nu, u0) not in eig:
            eig[(nu, u0)] = A_eigen(nu, field).at(field.from_int(u0))
        return eig[(nu, u0)]

    pieces = {}
    for kind in ("B", "C"):
        pieces[kind] = [step_series_apply(kind, j, m_mu, bound) for j in range(k + 1)]
    for u0 in u_samples:
        u = field.from_int(u0)
        # raising side: p1 A(u) - q A(u) p1 = -u B(u) (1-q)/(1-t) on M_mu
        lhs = SymFun.zero("p", bound, field)
        for lam, _ in add_box_positions(mu):
            c = macops.pieri_up_coeff(lam, mu, field) * (a_val(mu, u0) - field.q * a_val(lam, u0))
            lhs = lhs + convert(macdonald_M(lam, bound, field), "p").scale(c)
        rhs = SymFun.zero("p", bound, field)
        for j, piece in enumerate(pieces["B"]):
            if piece.is_zero():
                continue
            poch = pochhammer_u(u, j + 1, field)
            if not poch:
                raise PoleAtSample("u=%d hits a factor of the expansion basis" % u0)
            rhs = rhs + piece.scale(field.one / poch)
        rhs = rhs.scale(-u * (field.one - field.q) / (field.one - field.t))
        if lhs != rhs:
            return _finish("corollary", params, t0, False,
                           "raising side fails at u=%d" % u0)
        # lowering side: A(u) d/dp1 - q d/dp1 A(u) = -u C(u) on M_mu
        lhs = SymFun.zero("p", bound, field)
        for nu, _ in remove_box_positions(mu):
            c = macops.pieri_down_coeff(nu, mu, field) * (a_val(nu, u0) - field.q * a_val(mu, u0))
            lhs = lhs + convert(macdonald_M(nu, bound, field), "p").scale(c)
        rhs = SymFun.zero("p", bound, field)
        for j, piece in enumerate(pieces["C"]):
            if piece.is_zero():
                continue
            rhs = rhs + piece.scale(field.one / pochhammer_u(u, j + 1, field))
        rhs = rhs.scale(-u)
        if lhs != rhs:
            return _finish("corollary", params, t0, False,
                           "lowering side fails at u=%d" % u0)
    return _finish("corollary", params, t0, True)


# ---------------------------------------------------------------------------
# the alternant identity

def _vandermonde_xpoly(N, field, skip=None):
    out = symfun.xpoly_one(N, field)
    idx = [i for i in range(N) if i != skip]
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            ea = [0] * N
            ea[idx[a]] = 1
            eb = [0] * N
            eb[idx[b]] = 1
            out = out * XPoly(N, {tuple(ea): field.one, tuple(eb): -field.one}, field)
    return out


def _embed_skip(xp, N, skip):
    # relabel an (N-1)-variable polynomial onto the N slots avoiding `skip`
    out = {}
    for e, c in xp.terms.items():
        ne = [0] * N
        j = 0
        for i in range(N):
            if i == skip:
                continue
            ne[i] = e[j]
            j += 1
        out[tuple(ne)] = c
    return XPoly(N, out, xp.field)


def alternant_F(mu, n, N, field=SYMBOLIC):
    """Signed symmetrisation of x^mu x_N^(N-1+n) times the deformed
    difference product on the first N-1 variables."""
    mu = Partition(mu)
    if len(mu) >= N:
        raise LengthExceedsN("need len(mu) < N")
    pad = list(mu) + [0] * (N - 1 - len(mu))
    seed = families.t_deformed_vandermonde(N - 1, field)
    shifted = {}
    for e, c in seed.terms.items():
        key = tuple(e[i] + pad[i] for i in range(N - 1)) + (N - 1 + n,)
        shifted[key] = c
    base = XPoly(N, shifted, field)
    total = XPoly.zero(N, field)
    for sigma in permutations(range(N)):
        sign = symfun._perm_sign(sigma)
        img = base.permute(sigma)
        total = total + (img if sign > 0 else img.scale(-field.one))
    _validate_alternant_decomposition(mu, n, N, total, field)
    return total


def _validate_alternant_decomposition(mu, n, N, total, field):
    # the same alternant, summed first over the slot receiving the large
    # power; v is taken over the N-1 variables the small factors live in
    tf = t_factors(mu, N=N - 1, field=field)
    lhs = total.scale(tf.b / tf.v)
    if N % 2 == 0:
        lhs = lhs.scale(-field.one)
    rhs = XPoly.zero(N, field)
    q_small = hl_alternant(mu, N - 1, field)
    b_mu = t_factors(mu, field=field).b
    for i in range(N):
        block = _embed_skip(expand_x(q_small), N, i).scale(b_mu)
        delta = _vandermonde_xpoly(N, field, skip=i)
        mono = [0] * N
        mono[i] = N - 1 + n
        piece = XPoly(N, {tuple(mono): field.one}, field) * delta * block
        rhs = rhs + (piece if i % 2 == 0 else piece.scale(-field.one))
    assert lhs == rhs, "slot decomposition of the alternant failed"


def check_proposition(N, lam, field=SYMBOLIC):
    """The signed alternant combination vanishes identically."""
    t0 = time.perf_counter()
    lam = Partition(lam)
    params = {"N": N, "lam": tuple(lam)}
    ell = len(lam)
    if not (0 < ell < N):
        raise ValueError("need 0 < len(lam) < N")
    total = alternant_F(lam, 0, N, field).scale(field.one - field.t ** ell)
    for mu in _interlacing_same_length(lam):
        if mu == tuple(lam):
            continue
        phi = morris_phi(lam, mu, field)
        if not phi:
            continue
        n = sum(lam) - sum(mu)
        total = total + alternant_F(mu, n, N, field).scale(phi)
    ok = total.is_zero()
    witness = None
    if not ok:
        e = sorted(total.terms)[0]
        witness = "monomial %s survives with %s" % (e, total.terms[e])
    return _finish("proposition", params, t0, ok, witness)


def _interlacing_same_length(lam):
    lam = tuple(lam)
    ell = len(lam)
    ranges = []
    for i in range(ell):
        low = lam[i + 1] if i + 1 < ell else 1
        ranges.append(range(low, lam[i] + 1))
    out = []
    for mu in product(*ranges):
        out.append(Partition(mu))
    return out


def _interlacing_subpartitions(lam):
    lam = tuple(lam)
    ell = len(lam)
    ranges = []
    for i in range(ell):
        low = lam[i + 1] if i + 1 < ell else 0
        ranges.append(range(low, lam[i] + 1))
    out = []
    for mu in product(*ranges):
        out.append(Partition(x for x in mu if x))
    return out


def check_decomposition(lam, N, i, field=SYMBOLIC):
    """Peeling one variable off a Hall-Littlewood Q polynomial."""
    t0 = time.perf_counter()
    lam = Partition(lam)
    params = {"lam": tuple(lam), "N": N, "i": i}
    if len(lam) > N or not (1 <= i <= N):
        raise ValueError("need len(lam) <= N and a variable index in range")
    b_lam = t_factors(lam, field=field).b
    lhs = expand_x(hl_alternant(lam, N, field)).scale(b_lam)
    rhs = XPoly.zero(N, field)
    for mu in _interlacing_subpartitions(lam):
        if len(mu) >= N:
            continue
        phi = morris_phi(lam, mu, field)
        if not phi:
            continue
        n = sum(lam) - sum(mu)
        b_mu = t_factors(mu, field=field).b
        block = _embed_skip(expand_x(hl_alternant(mu, N - 1, field)), N, i - 1).scale(b_mu)
        mono = [0] * N
        mono[i - 1] = n
        rhs = rhs + XPoly(N, {tuple(mono): phi}, field) * block
    ok = lhs == rhs
    return _finish("decomposition", params, t0, ok, "expansion differs")


# ---------------------------------------------------------------------------
# the finite-N symbol identity

def _ts_mul(a, b, field, xcap, ycap):
    out = {}
    for ka, xa in a.items():
        wa = sum(ka)
        for kb, xb in b.items():
            if wa + sum(kb) > ycap:
                continue
            key = Partition(sorted(tuple(ka) + tuple(kb), reverse=True))
            prod = (xa * xb).total_degree_cap(xcap)
            if prod.is_zero():
                continue
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return {k: v for k, v in out.items() if not v.is_zero()}


def check_finite_symbol(N, degree_bound, u_samples, field=SYMBOLIC):
    """Determinant symbol over the x alphabet against the length-graded
    expansion in Hall-Littlewood pairs, at integer u samples."""
    t0 = time.perf_counter()
    params = {"N": N, "degree_bound": degree_bound, "u_samples": tuple(u_samples)}
    D = degree_bound
    xcap = D + N * (N - 1) // 2
    rows = families.q_row_series(D, field) if D >= 1 else []
    empty = Partition()
    # T_i: 1 + sum_n x_i^n Q_n(y), keyed by the p expansion of the y side
    t_factors_by_var = []
    for i in range(N):
        entry = {empty: symfun.xpoly_one(N, field)}
        for n in range(1, D + 1):
            mono = [0] * N
            mono[i] = n
            xp = XPoly(N, {tuple(mono): field.one}, field)
            for alpha, c in rows[n - 1].coeffs.items():
                if alpha in entry:
                    entry[alpha] = entry[alpha] + xp.scale(c)
                else:
                    entry[alpha] = xp.scale(c)
        t_factors_by_var.append(entry)
    for u0 in u_samples:
        u = field.from_int(u0)
        det = {}
        for sigma in permutations(range(N)):
            sign = symfun._perm_sign(sigma)
            prod = {empty: symfun.xpoly_one(N, field)}
            for i in range(N):
                j = sigma[i] + 1
                shift = -u * field.t ** (1 - j)
                mono = [0] * N
                mono[i] = N - j
                xmono = XPoly(N, {tuple(mono): field.one}, field)
                factor = {}
                for alpha, xp in t_factors_by_var[i].items():
                    factor[alpha] = xp
                factor[empty] = factor[empty] + XPoly(N, {(0,) * N: shift}, field)
                factor = {alpha: (xmono * xp).total_degree_cap(xcap) for alpha, xp in factor.items()}
                prod = _ts_mul(prod, factor, field, xcap, D)
            for alpha, xp in prod.items():
                piece = xp if sign > 0 else xp.scale(-field.one)
                if alpha in det:
                    det[alpha] = det[alpha] + piece
                else:
                    det[alpha] = piece
        poch_n = pochhammer_u(u, N, field)
        lhs = {}
        for alpha, xp in det.items():
            if xp.is_zero():
                continue
            quot = divide_by_vandermonde(xp)
            quot = NSymPoly(N, {k: c for k, c in quot.coeffs.items() if sum(k) <= D}, field)
            quot = quot.scale(field.one / poch_n)
            if not quot.is_zero():
                lhs[alpha] = quot
        rhs = {}
        for w in range(0, D + 1):
            for lam in enumerate_partitions(w, max_length=N):
                b_lam = t_factors(lam, field=field).b
                qx = hl_alternant(lam, N, field).scale(b_lam / pochhammer_u(u, len(lam), field))
                py = convert(hall_littlewood(lam, "P", field=field), "p")
                for alpha, c in py.coeffs.items():
                    piece = qx.scale(c)
                    if alpha in rhs:
                        rhs[alpha] = rhs[alpha] + piece
                    else:
                        rhs[alpha] = piece
        rhs = {k: v for k, v in rhs.items() if not v.is_zero()}
        if lhs != rhs:
            keys = sorted(set(lhs) | set(rhs))
            for key in keys:
                if lhs.get(key) != rhs.get(key):
                    return _finish("finite_symbol", params, t0, False,
                                   "u=%d, y-component p%s differs" % (u0, tuple(key)))
    return _finish("finite_symbol", params, t0, True)


# ---------------------------------------------------------------------------
# suite runner

def _p_generator(n, field):
    return SymFun("p", {Partition((n,)): field.one}, n, field)


def suite_kernel(config, field=SYMBOLIC):
    d = config.get("max_degree", 4)
    cases = [("p1", _p_generator(1, field)), ("p2", _p_generator(2, field)),
             ("p3", _p_generator(3, field)), ("M[2,1]", macdonald_M((2, 1), field=field))]
    for label, f in cases:
        yield check_kernel_lemma(f, d, label=label, field=field)


def suite_hl_cauchy(config, field=SYMBOLIC):
    for d in range(1, config.get("max_degree", 4) + 1):
        yield check_hl_cauchy(d, field)


def suite_green(config, field=SYMBOLIC):
    for d in range(1, config.get("degree", 6) + 1):
        yield check_green(d, field)


def suite_deigen(config, field=SYMBOLIC):
    max_n = config.get("N", 4)
    max_w = config.get("max_weight", 5)
    for N in range(1, max_n + 1):
        for w in range(0, max_w + 1):
            for lam in enumerate_partitions(w, max_length=N):
                yield check_deigen(N, lam, field)


def suite_theorem(config, field=SYMBOLIC):
    max_w = config.get("max_degree", 6)
    max_k = config.get("max_k", 3)
    for w in range(0, max_w + 1):
        for lam in enumerate_partitions(w):
            for k in range(1, max_k + 1):
                yield check_theorem_basic(k, lam, field)


def suite_corollary(config, field=SYMBOLIC):
    max_w = config.get("max_weight", 4)
    samples = config.get("u_samples", (2, 3, 5))
    for w in range(0, max_w + 1):
        for mu in enumerate_partitions(w):
            yield check_corollary(sum(mu) + 1, mu, samples, field)


def suite_proposition(config, field=SYMBOLIC):
    max_n = config.get("N", 4)
    max_w = config.get("max_weight", 5)
    for N in range(2, max_n + 1):
        for w in range(1, max_w + 1):
            for lam in enumerate_partitions(w, max_length=N - 1):
                yield check_proposition(N, lam, field)


def suite_finite_symbol(config, field=SYMBOLIC):
    max_n = config.get("N", 2)
    d = config.get("max_degree", 2)
    samples = config.get("u_samples", (2, 3))
    for N in range(1, max_n + 1):
        yield check_finite_symbol(N, d, samples, field)


def suite_decomposition(config, field=SYMBOLIC):
    max_n = config.get("N", 3)
    max_w = config.get("max_weight", 3)
    for N in range(1, max_n + 1):
        for w in range(0, max_w + 1):
            for lam in enumerate_partitions(w, max_length=N):
                for i in range(1, N + 1):
                    yield check_decomposition(lam, N, i, field)


SUITES = {
    "kernel": suite_kernel,
    "hl-cauchy": suite_hl_cauchy,
    "green": suite_green,
    "deigen": suite_deigen,
    "theorem": suite_theorem,
    "corollary": suite_corollary,
    "proposition": suite_proposition,
    "finite-symbol": suite_finite_symbol,
    "decomposition": suite_decomposition,
}


def run_suite(name, config=None, field=SYMBOLIC):
    """Yield CheckReports for one suite, or for every suite with 'all'."""
    config = config or {}
    if name == "all":
        for key in SUITES:
            yield from SUITES[key](config, field)
        return
    if name not in SUITES:
        raise KeyError("unknown suite %r" % (name,))
    yield from SUITES[name](config, field)


def write_reports(reports, stream):
    """JSON-lines serialisation; returns (passed, failed)."""
    passed = failed = 0
    elapsed = 0.0
    for report in reports:
        if report.passed():
            passed += 1
        else:
            failed += 1
        elapsed += report.elapsed
        stream.write(json.dumps(report.to_json_dict(), sort_keys=True) + "\n")
    stream.write(json.dumps(
        {"summary": {"pass": passed, "fail": failed, "elapsed": round(elapsed, 6)}},
        sort_keys=True,
    ) + "\n")
    return passed, failed
