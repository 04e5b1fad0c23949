#include "lrt/triple.hpp"

#include <cassert>

#include "lrt/sampler.hpp"

namespace lrt {

namespace {

constexpr int kSampleCount = 6;

std::string tuple_name(std::initializer_list<std::string> parts) {
    std::string s = "(";
    bool first = true;
    for (const auto& p : parts) {
        if (!first) s += ",";
        s += p;
        first = false;
    }
    return s + ")";
}

}  // namespace

TripleData TripleData::zero(const BaseAlgebra& a, std::size_t n_h,
                            std::size_t n_q,
                            const std::vector<std::string>& names_h,
                            const std::vector<std::string>& names_q) {
    TripleData t;
    t.A = a;
    t.nH = n_h;
    t.nQ = n_q;
    t.namesH = names_h;
    t.namesQ = names_q;
    t.anchorH.assign(n_h, zero_derivation(a));
    t.anchorQ.assign(n_q, zero_derivation(a));
    t.bracketH.assign(n_h, std::vector<ModEl>(n_h, mod_zero(n_h, a)));
    t.bracketQ.assign(n_q, std::vector<ModEl>(n_q, mod_zero(n_q, a)));
    t.delta.assign(n_q, std::vector<ModEl>(n_q, mod_zero(n_h, a)));
    t.connHQ.assign(n_h, std::vector<ModEl>(n_q, mod_zero(n_q, a)));
    t.connQH.assign(n_q, std::vector<ModEl>(n_h, mod_zero(n_h, a)));
    return t;
}

ModEl TripleData::brH(std::size_t i, std::size_t j) const {
    if (i == j) return hZero();
    if (i < j) return bracketH[i][j];
    return mod_scale(Rat(-1), bracketH[j][i]);
}

ModEl TripleData::brQ(std::size_t i, std::size_t j) const {
    if (i == j) return qZero();
    if (i < j) return bracketQ[i][j];
    return mod_scale(Rat(-1), bracketQ[j][i]);
}

ModEl TripleData::del(std::size_t i, std::size_t j) const {
    if (i == j) return hZero();
    if (i < j) return delta[i][j];
    return mod_scale(Rat(-1), delta[j][i]);
}

AEl TripleData::actH(const ModEl& x, const AEl& a) const {
    AEl r = A.zero();
    for (std::size_t i = 0; i < nH; ++i) {
        if (vec_is_zero(x[i])) continue;
        r = vec_add(r, A.mul(x[i], anchorH[i].apply(a)));
    }
    return r;
}

AEl TripleData::actQ(const ModEl& xi, const AEl& a) const {
    AEl r = A.zero();
    for (std::size_t i = 0; i < nQ; ++i) {
        if (vec_is_zero(xi[i])) continue;
        r = vec_add(r, A.mul(xi[i], anchorQ[i].apply(a)));
    }
    return r;
}

ModEl TripleData::brHE(const ModEl& x, const ModEl& y) const {
    ModEl r = hZero();
    for (std::size_t i = 0; i < nH; ++i) {
        if (vec_is_zero(x[i])) continue;
        for (std::size_t j = 0; j < nH; ++j) {
            if (vec_is_zero(y[j])) continue;
            r = mod_add(r, mod_scale_a(A, A.mul(x[i], y[j]), brH(i, j)));
        }
    }
    for (std::size_t j = 0; j < nH; ++j) {
        r[j] = vec_add(r[j], actH(x, y[j]));
        r[j] = vec_sub(r[j], actH(y, x[j]));
    }
    return r;
}

ModEl TripleData::brQE(const ModEl& xi, const ModEl& eta) const {
    ModEl r = qZero();
    for (std::size_t i = 0; i < nQ; ++i) {
        if (vec_is_zero(xi[i])) continue;
        for (std::size_t j = 0; j < nQ; ++j) {
            if (vec_is_zero(eta[j])) continue;
            r = mod_add(r, mod_scale_a(A, A.mul(xi[i], eta[j]), brQ(i, j)));
        }
    }
    for (std::size_t j = 0; j < nQ; ++j) {
        r[j] = vec_add(r[j], actQ(xi, eta[j]));
        r[j] = vec_sub(r[j], actQ(eta, xi[j]));
    }
    return r;
}

ModEl TripleData::delE(const ModEl& xi, const ModEl& eta) const {
    ModEl r = hZero();
    for (std::size_t i = 0; i < nQ; ++i) {
        if (vec_is_zero(xi[i])) continue;
        for (std::size_t j = 0; j < nQ; ++j) {
            if (vec_is_zero(eta[j])) continue;
            r = mod_add(r, mod_scale_a(A, A.mul(xi[i], eta[j]), del(i, j)));
        }
    }
    return r;
}

ModEl TripleData::cHQ(const ModEl& x, const ModEl& xi) const {
    ModEl r = qZero();
    for (std::size_t i = 0; i < nH; ++i) {
        if (vec_is_zero(x[i])) continue;
        for (std::size_t j = 0; j < nQ; ++j) {
            if (vec_is_zero(xi[j])) continue;
            r = mod_add(r, mod_scale_a(A, A.mul(x[i], xi[j]), connHQ[i][j]));
        }
    }
    for (std::size_t j = 0; j < nQ; ++j) r[j] = vec_add(r[j], actH(x, xi[j]));
    return r;
}

ModEl TripleData::cQH(const ModEl& xi, const ModEl& x) const {
    ModEl r = hZero();
    for (std::size_t i = 0; i < nQ; ++i) {
        if (vec_is_zero(xi[i])) continue;
        for (std::size_t j = 0; j < nH; ++j) {
            if (vec_is_zero(x[j])) continue;
            r = mod_add(r, mod_scale_a(A, A.mul(xi[i], x[j]), connQH[i][j]));
        }
    }
    for (std::size_t j = 0; j < nH; ++j) r[j] = vec_add(r[j], actQ(xi, x[j]));
    return r;
}

TripleData TripleData::swapped() const {
    TripleData s = TripleData::zero(A, nQ, nH, namesQ, namesH);
    s.name = name + ".swapped";
    s.anchorH = anchorQ;
    s.anchorQ = anchorH;
    s.bracketH = bracketQ;
    s.bracketQ = bracketH;
    s.connHQ = connQH;
    s.connQH = connHQ;
    // delta of the swapped data stays zero
    return s;
}

std::string TripleData::hName(const ModEl& x) const {
    std::string s;
    for (std::size_t i = 0; i < nH; ++i) {
        if (!vec_is_zero(x[i])) {
            if (!s.empty()) s += "+";
            s += namesH[i];
        }
    }
    return s.empty() ? "0" : s;
}

std::string TripleData::qName(const ModEl& xi) const {
    std::string s;
    for (std::size_t i = 0; i < nQ; ++i) {
        if (!vec_is_zero(xi[i])) {
            if (!s.empty()) s += "+";
            s += namesQ[i];
        }
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// total Lie-Rinehart algebra
// ---------------------------------------------------------------------------

AEl TotalLie::act(const ModEl& u, const AEl& a) const {
    AEl r = A.zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (vec_is_zero(u[i])) continue;
        r = vec_add(r, A.mul(u[i], anchor[i].apply(a)));
    }
    return r;
}

ModEl TotalLie::br(const ModEl& u, const ModEl& v) const {
    ModEl r = mod_zero(n, A);
    for (std::size_t i = 0; i < n; ++i) {
        if (vec_is_zero(u[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (vec_is_zero(v[j])) continue;
            r = mod_add(r, mod_scale_a(A, A.mul(u[i], v[j]), bracket[i][j]));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        r[j] = vec_add(r[j], act(u, v[j]));
        r[j] = vec_sub(r[j], act(v, u[j]));
    }
    return r;
}

namespace {

// [(x,xi),(y,eta)] = [x,y]_H + [xi,eta]_Q + delta(xi,eta)
//                    + x.eta - eta.x + xi.y - y.xi
// H-part: [x,y]_H + delta(xi,eta) - eta.x + xi.y
// Q-part: [xi,eta]_Q + x.eta - y.xi
ModEl total_bracket(const TripleData& t, const ModEl& x, const ModEl& xi,
                    const ModEl& y, const ModEl& eta) {
    ModEl h = t.brHE(x, y);
    h = mod_add(h, t.delE(xi, eta));
    h = mod_sub(h, t.cQH(eta, x));
    h = mod_add(h, t.cQH(xi, y));
    ModEl q = t.brQE(xi, eta);
    q = mod_add(q, t.cHQ(x, eta));
    q = mod_sub(q, t.cHQ(y, xi));
    ModEl r = h;
    r.insert(r.end(), q.begin(), q.end());
    return r;
}

}  // namespace

TotalLie assemble_total(const TripleData& t) {
    TotalLie l;
    l.name = t.name;
    l.A = t.A;
    l.n = t.nH + t.nQ;
    l.names = t.namesH;
    l.names.insert(l.names.end(), t.namesQ.begin(), t.namesQ.end());
    l.anchor = t.anchorH;
    l.anchor.insert(l.anchor.end(), t.anchorQ.begin(), t.anchorQ.end());
    l.bracket.assign(l.n, std::vector<ModEl>(l.n));
    for (std::size_t i = 0; i < l.n; ++i) {
        const ModEl xi_h = i < t.nH ? t.hBasis(i) : t.hZero();
        const ModEl xi_q = i < t.nH ? t.qZero() : t.qBasis(i - t.nH);
        for (std::size_t j = 0; j < l.n; ++j) {
            const ModEl yj_h = j < t.nH ? t.hBasis(j) : t.hZero();
            const ModEl yj_q = j < t.nH ? t.qZero() : t.qBasis(j - t.nH);
            l.bracket[i][j] = total_bracket(t, xi_h, xi_q, yj_h, yj_q);
        }
    }
    return l;
}

TripleData split_total(const TotalLie& l, std::size_t n_h) {
    const std::size_t n_q = l.n - n_h;
    std::vector<std::string> names_h(l.names.begin(), l.names.begin() + n_h);
    std::vector<std::string> names_q(l.names.begin() + n_h, l.names.end());
    TripleData t = TripleData::zero(l.A, n_h, n_q, names_h, names_q);
    t.name = l.name;
    auto h_part = [&](const ModEl& u) {
        return ModEl(u.begin(), u.begin() + n_h);
    };
    auto q_part = [&](const ModEl& u) {
        return ModEl(u.begin() + n_h, u.end());
    };
    for (std::size_t i = 0; i < n_h; ++i) {
        t.anchorH[i] = l.anchor[i];
        for (std::size_t j = i + 1; j < n_h; ++j) {
            t.bracketH[i][j] = h_part(l.bracket[i][j]);
        }
        for (std::size_t j = 0; j < n_q; ++j) {
            // [x_i, xi_j] = x_i . xi_j - xi_j . x_i
            t.connHQ[i][j] = q_part(l.bracket[i][n_h + j]);
            t.connQH[j][i] = mod_scale(Rat(-1), h_part(l.bracket[i][n_h + j]));
        }
    }
    for (std::size_t i = 0; i < n_q; ++i) {
        t.anchorQ[i] = l.anchor[n_h + i];
        for (std::size_t j = i + 1; j < n_q; ++j) {
            t.bracketQ[i][j] = q_part(l.bracket[n_h + i][n_h + j]);
            t.delta[i][j] = h_part(l.bracket[n_h + i][n_h + j]);
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// checker suites
// ---------------------------------------------------------------------------

SuiteReport check_almost_pre(const TripleData& t, std::uint64_t seed) {
    SuiteReport rep;
    rep.instance = t.name;
    rep.suite = "almost-pre";
    const BaseAlgebra& A = t.A;

    {
        ResidualCheck c("base.algebra", "A commutative unital associative");
        std::string why;
        if (!A.is_valid(&why)) c.fail(why);
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("anchor.H.derivation", "anchors of H lie in Der(A)");
        for (std::size_t i = 0; i < t.nH; ++i) {
            std::string why;
            if (!t.anchorH[i].is_derivation(A, &why)) {
                c.fail(t.namesH[i] + ": " + why);
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("anchor.Q.derivation", "anchors of Q lie in Der(A)");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            std::string why;
            if (!t.anchorQ[i].is_derivation(A, &why)) {
                c.fail(t.namesQ[i] + ": " + why);
            }
        }
        rep.checks.push_back(c.result());
    }

    Sampler smp(seed);
    // (a x)(b) = a (x(b)) and the bracket Leibniz rule, H side
    {
        ResidualCheck c("act.H.A-linear", "(a x)(b) = a(x(b))");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const AEl b = smp.ael(A);
            const ModEl x = smp.mod(t.nH, A);
            const Vec res = vec_sub(t.actH(mod_scale_a(A, a, x), b),
                                    A.mul(a, t.actH(x, b)));
            c.add(res, "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("bracket.H.leibniz", "[x,ay] = x(a)y + a[x,y]");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl x = smp.mod(t.nH, A);
            const ModEl y = smp.mod(t.nH, A);
            ModEl rhs = mod_scale_a(A, t.actH(x, a), y);
            rhs = mod_add(rhs, mod_scale_a(A, a, t.brHE(x, y)));
            const ModEl res = mod_sub(t.brHE(x, mod_scale_a(A, a, y)), rhs);
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("act.Q.A-linear", "(a xi)(b) = a(xi(b))");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const AEl b = smp.ael(A);
            const ModEl xi = smp.mod(t.nQ, A);
            const Vec res = vec_sub(t.actQ(mod_scale_a(A, a, xi), b),
                                    A.mul(a, t.actQ(xi, b)));
            c.add(res, "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("bracket.Q.leibniz", "[xi,a eta] = xi(a)eta + a[xi,eta]");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl xi = smp.mod(t.nQ, A);
            const ModEl eta = smp.mod(t.nQ, A);
            ModEl rhs = mod_scale_a(A, t.actQ(xi, a), eta);
            rhs = mod_add(rhs, mod_scale_a(A, a, t.brQE(xi, eta)));
            const ModEl res = mod_sub(t.brQE(xi, mod_scale_a(A, a, eta)), rhs);
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("conn.HQ.leibniz", "x.(a xi) = x(a)xi + a(x.xi)");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl x = smp.mod(t.nH, A);
            const ModEl xi = smp.mod(t.nQ, A);
            ModEl rhs = mod_scale_a(A, t.actH(x, a), xi);
            rhs = mod_add(rhs, mod_scale_a(A, a, t.cHQ(x, xi)));
            const ModEl res = mod_sub(t.cHQ(x, mod_scale_a(A, a, xi)), rhs);
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("conn.HQ.A-linear", "(a x).xi = a(x.xi)");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl x = smp.mod(t.nH, A);
            const ModEl xi = smp.mod(t.nQ, A);
            const ModEl res = mod_sub(t.cHQ(mod_scale_a(A, a, x), xi),
                                      mod_scale_a(A, a, t.cHQ(x, xi)));
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("conn.QH.leibniz", "xi.(a x) = xi(a)x + a(xi.x)");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl xi = smp.mod(t.nQ, A);
            const ModEl x = smp.mod(t.nH, A);
            ModEl rhs = mod_scale_a(A, t.actQ(xi, a), x);
            rhs = mod_add(rhs, mod_scale_a(A, a, t.cQH(xi, x)));
            const ModEl res = mod_sub(t.cQH(xi, mod_scale_a(A, a, x)), rhs);
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("conn.QH.A-linear", "(a xi).x = a(xi.x)");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl xi = smp.mod(t.nQ, A);
            const ModEl x = smp.mod(t.nH, A);
            const ModEl res = mod_sub(t.cQH(mod_scale_a(A, a, xi), x),
                                      mod_scale_a(A, a, t.cQH(xi, x)));
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("pairing.skew-bilinear",
                        "delta skew and A-bilinear");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl xi = smp.mod(t.nQ, A);
            const ModEl eta = smp.mod(t.nQ, A);
            const ModEl skew =
                mod_add(t.delE(xi, eta), t.delE(eta, xi));
            c.add(mod_flatten(skew), "sample#" + std::to_string(s) + ":skew");
            const ModEl lin = mod_sub(t.delE(mod_scale_a(A, a, xi), eta),
                                      mod_scale_a(A, a, t.delE(xi, eta)));
            c.add(mod_flatten(lin), "sample#" + std::to_string(s) + ":lin");
            c.add(mod_flatten(t.delE(xi, xi)),
                  "sample#" + std::to_string(s) + ":diag");
        }
        rep.checks.push_back(c.result());
    }
    return rep;
}

SuiteReport check_pre(const TripleData& t, std::uint64_t seed) {
    SuiteReport rep;
    rep.instance = t.name;
    rep.suite = "pre";
    const BaseAlgebra& A = t.A;
    Sampler smp(seed + 1);

    {
        ResidualCheck c("pre.jacobi.H", "Jacobi identity for the H bracket");
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t j = 0; j < t.nH; ++j) {
                for (std::size_t k = 0; k < t.nH; ++k) {
                    ModEl jac = t.brHE(t.hBasis(i), t.brHE(t.hBasis(j),
                                                           t.hBasis(k)));
                    jac = mod_add(jac, t.brHE(t.hBasis(j),
                                              t.brHE(t.hBasis(k),
                                                     t.hBasis(i))));
                    jac = mod_add(jac, t.brHE(t.hBasis(k),
                                              t.brHE(t.hBasis(i),
                                                     t.hBasis(j))));
                    c.add(mod_flatten(jac),
                          tuple_name({t.namesH[i], t.namesH[j],
                                      t.namesH[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            const ModEl x = smp.mod(t.nH, A);
            const ModEl y = smp.mod(t.nH, A);
            const ModEl z = smp.mod(t.nH, A);
            ModEl jac = t.brHE(x, t.brHE(y, z));
            jac = mod_add(jac, t.brHE(y, t.brHE(z, x)));
            jac = mod_add(jac, t.brHE(z, t.brHE(x, y)));
            c.add(mod_flatten(jac), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("pre.anchor.H.morphism",
                        "x(y(a)) - y(x(a)) = [x,y](a)");
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t j = 0; j < t.nH; ++j) {
                for (std::size_t k = 0; k < A.dim; ++k) {
                    const AEl a = A.basis(k);
                    const ModEl x = t.hBasis(i);
                    const ModEl y = t.hBasis(j);
                    Vec res = vec_sub(t.actH(x, t.actH(y, a)),
                                      t.actH(y, t.actH(x, a)));
                    res = vec_sub(res, t.actH(t.brHE(x, y), a));
                    c.add(res, tuple_name({t.namesH[i], t.namesH[j],
                                           A.names[k]}));
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("pre.flat",
                        "[x,y].xi = x.(y.xi) - y.(x.xi)");
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t j = 0; j < t.nH; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    const ModEl x = t.hBasis(i);
                    const ModEl y = t.hBasis(j);
                    const ModEl xi = t.qBasis(k);
                    ModEl res = t.cHQ(t.brHE(x, y), xi);
                    res = mod_sub(res, t.cHQ(x, t.cHQ(y, xi)));
                    res = mod_add(res, t.cHQ(y, t.cHQ(x, xi)));
                    c.add(mod_flatten(res),
                          tuple_name({t.namesH[i], t.namesH[j],
                                      t.namesQ[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            const ModEl x = smp.mod(t.nH, A);
            const ModEl y = smp.mod(t.nH, A);
            const ModEl xi = smp.mod(t.nQ, A);
            ModEl res = t.cHQ(t.brHE(x, y), xi);
            res = mod_sub(res, t.cHQ(x, t.cHQ(y, xi)));
            res = mod_add(res, t.cHQ(y, t.cHQ(x, xi)));
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    return rep;
}

SuiteReport check_triple(const TripleData& t, std::uint64_t seed) {
    SuiteReport rep;
    rep.instance = t.name;
    rep.suite = "triple";
    const BaseAlgebra& A = t.A;
    Sampler smp(seed + 2);

    // 1: xi(x(a)) - x(xi(a)) = (xi.x)(a) - (x.xi)(a)
    {
        ResidualCheck c("triple.compat.1",
                        "mixed anchor commutator vs connections");
        auto res1 = [&](const ModEl& xi, const ModEl& x, const AEl& a) {
            Vec r = vec_sub(t.actQ(xi, t.actH(x, a)),
                            t.actH(x, t.actQ(xi, a)));
            r = vec_sub(r, t.actH(t.cQH(xi, x), a));
            r = vec_add(r, t.actQ(t.cHQ(x, xi), a));
            return r;
        };
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nH; ++j) {
                for (std::size_t k = 0; k < A.dim; ++k) {
                    c.add(res1(t.qBasis(i), t.hBasis(j), A.basis(k)),
                          tuple_name({t.namesQ[i], t.namesH[j], A.names[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res1(smp.mod(t.nQ, A), smp.mod(t.nH, A), smp.ael(A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    // 2: x.[xi,eta]_Q = [x.xi,eta]_Q + [xi,x.eta]_Q - (xi.x).eta + (eta.x).xi
    {
        ResidualCheck c("triple.compat.2",
                        "H-action is a derivation of the Q bracket");
        auto res2 = [&](const ModEl& x, const ModEl& xi, const ModEl& eta) {
            ModEl r = t.cHQ(x, t.brQE(xi, eta));
            r = mod_sub(r, t.brQE(t.cHQ(x, xi), eta));
            r = mod_sub(r, t.brQE(xi, t.cHQ(x, eta)));
            r = mod_add(r, t.cHQ(t.cQH(xi, x), eta));
            r = mod_sub(r, t.cHQ(t.cQH(eta, x), xi));
            return mod_flatten(r);
        };
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    c.add(res2(t.hBasis(i), t.qBasis(j), t.qBasis(k)),
                          tuple_name({t.namesH[i], t.namesQ[j], t.namesQ[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res2(smp.mod(t.nH, A), smp.mod(t.nQ, A), smp.mod(t.nQ, A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    // 3: xi.[x,y]_H = [xi.x,y]_H + [x,xi.y]_H - (x.xi).y + (y.xi).x
    {
        ResidualCheck c("triple.compat.3",
                        "Q-action is a derivation of the H bracket");
        auto res3 = [&](const ModEl& xi, const ModEl& x, const ModEl& y) {
            ModEl r = t.cQH(xi, t.brHE(x, y));
            r = mod_sub(r, t.brHE(t.cQH(xi, x), y));
            r = mod_sub(r, t.brHE(x, t.cQH(xi, y)));
            r = mod_add(r, t.cQH(t.cHQ(x, xi), y));
            r = mod_sub(r, t.cQH(t.cHQ(y, xi), x));
            return mod_flatten(r);
        };
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nH; ++j) {
                for (std::size_t k = 0; k < t.nH; ++k) {
                    c.add(res3(t.qBasis(i), t.hBasis(j), t.hBasis(k)),
                          tuple_name({t.namesQ[i], t.namesH[j], t.namesH[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res3(smp.mod(t.nQ, A), smp.mod(t.nH, A), smp.mod(t.nH, A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    // 4: xi(eta(a)) - eta(xi(a)) = [xi,eta]_Q(a) + (delta(xi,eta))(a)
    {
        ResidualCheck c("triple.compat.4",
                        "Q anchor commutator vs bracket and pairing");
        auto res4 = [&](const ModEl& xi, const ModEl& eta, const AEl& a) {
            Vec r = vec_sub(t.actQ(xi, t.actQ(eta, a)),
                            t.actQ(eta, t.actQ(xi, a)));
            r = vec_sub(r, t.actQ(t.brQE(xi, eta), a));
            r = vec_sub(r, t.actH(t.delE(xi, eta), a));
            return r;
        };
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < A.dim; ++k) {
                    c.add(res4(t.qBasis(i), t.qBasis(j), A.basis(k)),
                          tuple_name({t.namesQ[i], t.namesQ[j], A.names[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res4(smp.mod(t.nQ, A), smp.mod(t.nQ, A), smp.ael(A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    // 5: [xi,eta]_Q.x = xi.(eta.x) - eta.(xi.x) - delta(x.xi,eta)
    //                   - delta(xi,x.eta) + [x,delta(xi,eta)]_H
    {
        ResidualCheck c("triple.compat.5",
                        "Q bracket action on H vs curvature of the pairing");
        auto res5 = [&](const ModEl& xi, const ModEl& eta, const ModEl& x) {
            ModEl r = t.cQH(t.brQE(xi, eta), x);
            r = mod_sub(r, t.cQH(xi, t.cQH(eta, x)));
            r = mod_add(r, t.cQH(eta, t.cQH(xi, x)));
            r = mod_add(r, t.delE(t.cHQ(x, xi), eta));
            r = mod_add(r, t.delE(xi, t.cHQ(x, eta)));
            r = mod_sub(r, t.brHE(x, t.delE(xi, eta)));
            return mod_flatten(r);
        };
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nH; ++k) {
                    c.add(res5(t.qBasis(i), t.qBasis(j), t.hBasis(k)),
                          tuple_name({t.namesQ[i], t.namesQ[j], t.namesH[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res5(smp.mod(t.nQ, A), smp.mod(t.nQ, A), smp.mod(t.nH, A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    // 6: cyclic sum of [[xi,eta]_Q,theta]_Q + (delta(xi,eta)).theta = 0
    {
        ResidualCheck c("triple.compat.6",
                        "Q Jacobiator controlled by the pairing");
        auto res6 = [&](const ModEl& xi, const ModEl& eta, const ModEl& th) {
            ModEl r = t.qZero();
            const ModEl* v[3] = {&xi, &eta, &th};
            for (int cyc = 0; cyc < 3; ++cyc) {
                const ModEl& a = *v[cyc];
                const ModEl& b = *v[(cyc + 1) % 3];
                const ModEl& cc = *v[(cyc + 2) % 3];
                r = mod_add(r, t.brQE(t.brQE(a, b), cc));
                r = mod_add(r, t.cHQ(t.delE(a, b), cc));
            }
            return mod_flatten(r);
        };
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    c.add(res6(t.qBasis(i), t.qBasis(j), t.qBasis(k)),
                          tuple_name({t.namesQ[i], t.namesQ[j], t.namesQ[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res6(smp.mod(t.nQ, A), smp.mod(t.nQ, A), smp.mod(t.nQ, A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    // 7: cyclic sum delta([xi,eta]_Q,theta) = cyclic sum xi.delta(eta,theta)
    {
        ResidualCheck c("triple.compat.7",
                        "pairing cocycle condition");
        auto res7 = [&](const ModEl& xi, const ModEl& eta, const ModEl& th) {
            ModEl r = t.hZero();
            const ModEl* v[3] = {&xi, &eta, &th};
            for (int cyc = 0; cyc < 3; ++cyc) {
                const ModEl& a = *v[cyc];
                const ModEl& b = *v[(cyc + 1) % 3];
                const ModEl& cc = *v[(cyc + 2) % 3];
                r = mod_add(r, t.delE(t.brQE(a, b), cc));
                r = mod_sub(r, t.cQH(a, t.delE(b, cc)));
            }
            return mod_flatten(r);
        };
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    c.add(res7(t.qBasis(i), t.qBasis(j), t.qBasis(k)),
                          tuple_name({t.namesQ[i], t.namesQ[j], t.namesQ[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            c.add(res7(smp.mod(t.nQ, A), smp.mod(t.nQ, A), smp.mod(t.nQ, A)),
                  "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    return rep;
}

SuiteReport check_lie_rinehart(const TotalLie& l, std::uint64_t seed) {
    SuiteReport rep;
    rep.instance = l.name;
    rep.suite = "lie-rinehart";
    const BaseAlgebra& A = l.A;
    Sampler smp(seed + 3);
    auto basis = [&](std::size_t i) { return mod_basis(l.n, i, A); };

    {
        ResidualCheck c("total.skew", "bracket is alternating");
        for (std::size_t i = 0; i < l.n; ++i) {
            for (std::size_t j = 0; j < l.n; ++j) {
                const ModEl s = mod_add(l.bracket[i][j], l.bracket[j][i]);
                c.add(mod_flatten(s), tuple_name({l.names[i], l.names[j]}));
            }
            c.add(mod_flatten(l.bracket[i][i]),
                  tuple_name({l.names[i], l.names[i]}));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("total.anchor.derivation", "anchors lie in Der(A)");
        for (std::size_t i = 0; i < l.n; ++i) {
            std::string why;
            if (!l.anchor[i].is_derivation(A, &why)) {
                c.fail(l.names[i] + ": " + why);
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("total.leibniz", "[u,av] = u(a)v + a[u,v]");
        for (int s = 0; s < kSampleCount; ++s) {
            const AEl a = smp.ael(A);
            const ModEl u = smp.mod(l.n, A);
            const ModEl v = smp.mod(l.n, A);
            ModEl rhs = mod_scale_a(A, l.act(u, a), v);
            rhs = mod_add(rhs, mod_scale_a(A, a, l.br(u, v)));
            const ModEl res = mod_sub(l.br(u, mod_scale_a(A, a, v)), rhs);
            c.add(mod_flatten(res), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("total.jacobi", "Jacobi identity on L");
        for (std::size_t i = 0; i < l.n; ++i) {
            for (std::size_t j = 0; j < l.n; ++j) {
                for (std::size_t k = 0; k < l.n; ++k) {
                    ModEl jac = l.br(basis(i), l.br(basis(j), basis(k)));
                    jac = mod_add(jac,
                                  l.br(basis(j), l.br(basis(k), basis(i))));
                    jac = mod_add(jac,
                                  l.br(basis(k), l.br(basis(i), basis(j))));
                    c.add(mod_flatten(jac),
                          tuple_name({l.names[i], l.names[j], l.names[k]}));
                }
            }
        }
        for (int s = 0; s < kSampleCount; ++s) {
            const ModEl u = smp.mod(l.n, A);
            const ModEl v = smp.mod(l.n, A);
            const ModEl w = smp.mod(l.n, A);
            ModEl jac = l.br(u, l.br(v, w));
            jac = mod_add(jac, l.br(v, l.br(w, u)));
            jac = mod_add(jac, l.br(w, l.br(u, v)));
            c.add(mod_flatten(jac), "sample#" + std::to_string(s));
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("total.anchor.morphism",
                        "u(v(a)) - v(u(a)) = [u,v](a)");
        for (std::size_t i = 0; i < l.n; ++i) {
            for (std::size_t j = 0; j < l.n; ++j) {
                for (std::size_t k = 0; k < A.dim; ++k) {
                    const AEl a = A.basis(k);
                    Vec res = vec_sub(l.act(basis(i), l.act(basis(j), a)),
                                      l.act(basis(j), l.act(basis(i), a)));
                    res = vec_sub(res, l.act(l.bracket[i][j], a));
                    c.add(res, tuple_name({l.names[i], l.names[j],
                                           A.names[k]}));
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

Invariants invariants(const TripleData& t) {
    Invariants inv;
    const BaseAlgebra& A = t.A;

    // A^H: kernel of the stacked anchor matrices
    {
        Matrix stacked(t.nH * A.dim, A.dim);
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t r = 0; r < A.dim; ++r) {
                for (std::size_t c = 0; c < A.dim; ++c) {
                    stacked.at(i * A.dim + r, c) = t.anchorH[i].mat.at(r, c);
                }
            }
        }
        inv.a_h = kernel(stacked);
    }

    // Q^H: kernel of v -> (x_i . v)_i over the rational structure of Q
    {
        const std::size_t dim_q = t.nQ * A.dim;
        Matrix m(t.nH * dim_q, dim_q);
        for (std::size_t col = 0; col < dim_q; ++col) {
            Vec unit(dim_q, Rat(0));
            unit[col] = 1;
            const ModEl v = mod_unflatten(unit, t.nQ, A.dim);
            for (std::size_t i = 0; i < t.nH; ++i) {
                const Vec img = mod_flatten(t.cHQ(t.hBasis(i), v));
                for (std::size_t r = 0; r < dim_q; ++r) {
                    m.at(i * dim_q + r, col) = img[r];
                }
            }
        }
        for (const Vec& v : kernel(m)) {
            inv.q_h.push_back(mod_unflatten(v, t.nQ, A.dim));
        }
    }

    // L_H: kernel of u -> (proj_Q [u, x_i])_i inside L
    const TotalLie l = assemble_total(t);
    {
        const std::size_t dim_l = l.n * A.dim;
        const std::size_t dim_q = t.nQ * A.dim;
        Matrix m(t.nH * dim_q, dim_l);
        for (std::size_t col = 0; col < dim_l; ++col) {
            Vec unit(dim_l, Rat(0));
            unit[col] = 1;
            const ModEl u = mod_unflatten(unit, l.n, A.dim);
            for (std::size_t i = 0; i < t.nH; ++i) {
                ModEl xi = mod_zero(l.n, A);
                xi[i] = A.one();
                const ModEl b = l.br(u, xi);
                for (std::size_t q = 0; q < t.nQ; ++q) {
                    for (std::size_t k = 0; k < A.dim; ++k) {
                        m.at(i * dim_q + q * A.dim + k, col) =
                            b[t.nH + q][k];
                    }
                }
            }
        }
        for (const Vec& v : kernel(m)) {
            inv.l_h.push_back(mod_unflatten(v, l.n, A.dim));
        }
    }

    // closure of the total bracket on L_H
    {
        std::vector<Vec> flat;
        for (const ModEl& u : inv.l_h) flat.push_back(mod_flatten(u));
        const Subspace span = Subspace::span(flat, l.n * A.dim);
        inv.extension_ok = true;
        for (const ModEl& u : inv.l_h) {
            for (const ModEl& v : inv.l_h) {
                if (!span.contains(mod_flatten(l.br(u, v)))) {
                    inv.extension_ok = false;
                }
            }
        }
    }

    // delta restricted to Q^H
    inv.cocycle.assign(inv.q_h.size(),
                       std::vector<ModEl>(inv.q_h.size(), t.hZero()));
    for (std::size_t i = 0; i < inv.q_h.size(); ++i) {
        for (std::size_t j = 0; j < inv.q_h.size(); ++j) {
            inv.cocycle[i][j] = t.delE(inv.q_h[i], inv.q_h[j]);
        }
    }
    return inv;
}

SuiteReport check_trivial_action_extension(const TripleData& t) {
    SuiteReport rep;
    rep.instance = t.name;
    rep.suite = "trivial-action-extension";
    ResidualCheck c("trivial.action.extension",
                    "central-type extension with trivial H-action");
    for (std::size_t i = 0; i < t.nH; ++i) {
        if (!t.anchorH[i].mat.is_zero()) {
            c.fail("anchor of " + t.namesH[i] + " nonzero");
        }
        for (std::size_t j = 0; j < t.nQ; ++j) {
            if (!mod_is_zero(t.connHQ[i][j])) {
                c.fail(tuple_name({t.namesH[i], t.namesQ[j]}));
            }
        }
    }
    if (c.pass()) {
        // When the H-action is trivial, (A,Q) alone must satisfy the
        // Lie-Rinehart axioms; its Jacobiator vanishes by the cyclic
        // compatibility identity.
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    ModEl jac = t.brQE(t.qBasis(i),
                                       t.brQE(t.qBasis(j), t.qBasis(k)));
                    jac = mod_add(jac,
                                  t.brQE(t.qBasis(j),
                                         t.brQE(t.qBasis(k), t.qBasis(i))));
                    jac = mod_add(jac,
                                  t.brQE(t.qBasis(k),
                                         t.brQE(t.qBasis(i), t.qBasis(j))));
                    c.add(mod_flatten(jac),
                          "Q-jacobi" + tuple_name({t.namesQ[i], t.namesQ[j],
                                                   t.namesQ[k]}));
                }
            }
        }
    }
    rep.checks.push_back(c.result());
    return rep;
}

// ---------------------------------------------------------------------------
// multi-products
// ---------------------------------------------------------------------------

AEl Products::p3a(const ModEl& xi, const ModEl& eta, const AEl& a) const {
    return t.actH(t.delE(xi, eta), a);
}

AEl Products::p4a(const ModEl& al, const ModEl& xi, const ModEl& eta,
                  const AEl& a) const {
    return t.actH(t.cQH(al, t.delE(xi, eta)), a);
}

AEl Products::p5a(const ModEl& al, const ModEl& be, const ModEl& xi,
                  const ModEl& eta, const AEl& a) const {
    return t.actH(t.cQH(al, t.cQH(be, t.delE(xi, eta))), a);
}

ModEl Products::p3q(const ModEl& xi, const ModEl& eta, const ModEl& th) const {
    return t.cHQ(t.delE(xi, eta), th);
}

ModEl Products::p4q(const ModEl& al, const ModEl& xi, const ModEl& eta,
                    const ModEl& ka) const {
    return t.cHQ(t.cQH(al, t.delE(xi, eta)), ka);
}

ModEl Products::p5q(const ModEl& al, const ModEl& be, const ModEl& xi,
                    const ModEl& eta, const ModEl& ga) const {
    return t.cHQ(t.cQH(al, t.cQH(be, t.delE(xi, eta))), ga);
}

SuiteReport check_products(const TripleData& t, std::uint64_t /*seed*/) {
    SuiteReport rep;
    rep.instance = t.name;
    rep.suite = "products";
    const BaseAlgebra& A = t.A;
    const Products P{t};

    auto qb = [&](std::size_t i) { return t.qBasis(i); };
    auto qn = [&](std::size_t i) { return t.namesQ[i]; };

    // derivation property in the last A-variable
    {
        ResidualCheck c("prod.derivation",
                        "products are derivations of A in the last slot");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t u = 0; u < A.dim; ++u) {
                    for (std::size_t v = 0; v < A.dim; ++v) {
                        const AEl a = A.basis(u);
                        const AEl b = A.basis(v);
                        const AEl ab = A.mul(a, b);
                        Vec r1 = vec_sub(
                            P.p3a(qb(i), qb(j), ab),
                            vec_add(A.mul(P.p3a(qb(i), qb(j), a), b),
                                    A.mul(a, P.p3a(qb(i), qb(j), b))));
                        c.add(r1, "triple" + tuple_name({qn(i), qn(j),
                                                         A.names[u],
                                                         A.names[v]}));
                        for (std::size_t k = 0; k < t.nQ; ++k) {
                            Vec r2 = vec_sub(
                                P.p4a(qb(k), qb(i), qb(j), ab),
                                vec_add(A.mul(P.p4a(qb(k), qb(i), qb(j), a),
                                              b),
                                        A.mul(a, P.p4a(qb(k), qb(i), qb(j),
                                                       b))));
                            c.add(r2, "quadruple" + tuple_name(
                                          {qn(k), qn(i), qn(j)}));
                            for (std::size_t m = 0; m < t.nQ; ++m) {
                                Vec r3 = vec_sub(
                                    P.p5a(qb(k), qb(m), qb(i), qb(j), ab),
                                    vec_add(
                                        A.mul(P.p5a(qb(k), qb(m), qb(i),
                                                    qb(j), a), b),
                                        A.mul(a, P.p5a(qb(k), qb(m), qb(i),
                                                       qb(j), b))));
                                c.add(r3, "quintuple" + tuple_name(
                                              {qn(k), qn(m), qn(i), qn(j)}));
                            }
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    // skewness in the paired slots
    {
        ResidualCheck c("prod.skew", "products are skew in the paired slots");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t u = 0; u < A.dim; ++u) {
                    const AEl a = A.basis(u);
                    c.add(vec_add(P.p3a(qb(i), qb(j), a),
                                  P.p3a(qb(j), qb(i), a)),
                          tuple_name({qn(i), qn(j), A.names[u]}));
                }
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    c.add(mod_flatten(mod_add(P.p3q(qb(i), qb(j), qb(k)),
                                              P.p3q(qb(j), qb(i), qb(k)))),
                          tuple_name({qn(i), qn(j), qn(k)}));
                    for (std::size_t u = 0; u < A.dim; ++u) {
                        c.add(vec_add(P.p4a(qb(k), qb(i), qb(j), A.basis(u)),
                                      P.p4a(qb(k), qb(j), qb(i), A.basis(u))),
                              tuple_name({qn(k), qn(i), qn(j)}));
                    }
                    for (std::size_t m = 0; m < t.nQ; ++m) {
                        c.add(mod_flatten(
                                  mod_add(P.p4q(qb(k), qb(i), qb(j), qb(m)),
                                          P.p4q(qb(k), qb(j), qb(i), qb(m)))),
                              tuple_name({qn(k), qn(i), qn(j), qn(m)}));
                        for (std::size_t w = 0; w < A.dim; ++w) {
                            c.add(vec_add(P.p5a(qb(k), qb(m), qb(i), qb(j),
                                                A.basis(w)),
                                          P.p5a(qb(k), qb(m), qb(j), qb(i),
                                                A.basis(w))),
                                  tuple_name({qn(k), qn(m), qn(i), qn(j)}));
                        }
                        for (std::size_t w = 0; w < t.nQ; ++w) {
                            c.add(mod_flatten(mod_add(
                                      P.p5q(qb(k), qb(m), qb(i), qb(j),
                                            qb(w)),
                                      P.p5q(qb(k), qb(m), qb(j), qb(i),
                                            qb(w)))),
                                  tuple_name({qn(k), qn(m), qn(i), qn(j),
                                              qn(w)}));
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    // A-linearity in the paired slots / first slot
    {
        ResidualCheck c("prod.A-linear",
                        "A-linearity in paired slots and leading slot");
        for (std::size_t u = 0; u < A.dim; ++u) {
            const AEl a = A.basis(u);
            for (std::size_t i = 0; i < t.nQ; ++i) {
                for (std::size_t j = 0; j < t.nQ; ++j) {
                    const ModEl axi = mod_scale_a(A, a, qb(i));
                    for (std::size_t v = 0; v < A.dim; ++v) {
                        const AEl b = A.basis(v);
                        c.add(vec_sub(P.p3a(axi, qb(j), b),
                                      A.mul(a, P.p3a(qb(i), qb(j), b))),
                              tuple_name({A.names[u], qn(i), qn(j)}));
                    }
                    for (std::size_t k = 0; k < t.nQ; ++k) {
                        c.add(mod_flatten(mod_sub(
                                  P.p3q(axi, qb(j), qb(k)),
                                  mod_scale_a(A, a,
                                              P.p3q(qb(i), qb(j), qb(k))))),
                              tuple_name({A.names[u], qn(i), qn(j), qn(k)}));
                        const ModEl aal = mod_scale_a(A, a, qb(k));
                        for (std::size_t v = 0; v < A.dim; ++v) {
                            c.add(vec_sub(
                                      P.p4a(aal, qb(i), qb(j), A.basis(v)),
                                      A.mul(a, P.p4a(qb(k), qb(i), qb(j),
                                                     A.basis(v)))),
                                  tuple_name({A.names[u], qn(k)}));
                        }
                        for (std::size_t m = 0; m < t.nQ; ++m) {
                            c.add(mod_flatten(mod_sub(
                                      P.p4q(aal, qb(i), qb(j), qb(m)),
                                      mod_scale_a(A, a,
                                                  P.p4q(qb(k), qb(i), qb(j),
                                                        qb(m))))),
                                  tuple_name({A.names[u], qn(k)}));
                            for (std::size_t v = 0; v < A.dim; ++v) {
                                c.add(vec_sub(
                                          P.p5a(aal, qb(m), qb(i), qb(j),
                                                A.basis(v)),
                                          A.mul(a,
                                                P.p5a(qb(k), qb(m), qb(i),
                                                      qb(j), A.basis(v)))),
                                      tuple_name({A.names[u], qn(k), qn(m)}));
                            }
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    // Leibniz-type identities between products of different arity
    {
        ResidualCheck c("prod.leibniz",
                        "interaction with A-coefficients across arities");
        for (std::size_t u = 0; u < A.dim; ++u) {
            const AEl a = A.basis(u);
            for (std::size_t i = 0; i < t.nQ; ++i) {
                for (std::size_t j = 0; j < t.nQ; ++j) {
                    for (std::size_t k = 0; k < t.nQ; ++k) {
                        // {xi,eta;a theta} = a{xi,eta;theta} + {xi,eta;a}theta
                        ModEl r = P.p3q(qb(i), qb(j), mod_scale_a(A, a,
                                                                  qb(k)));
                        r = mod_sub(r, mod_scale_a(A, a,
                                                   P.p3q(qb(i), qb(j),
                                                         qb(k))));
                        r = mod_sub(r, mod_scale_a(A, P.p3a(qb(i), qb(j), a),
                                                   qb(k)));
                        c.add(mod_flatten(r),
                              "L1" + tuple_name({qn(i), qn(j), A.names[u],
                                                 qn(k)}));
                    }
                    for (std::size_t al = 0; al < t.nQ; ++al) {
                        for (std::size_t v = 0; v < A.dim; ++v) {
                            const AEl b = A.basis(v);
                            // {alpha;a xi,eta;b} = a{..} + alpha(a){xi,eta;b}
                            Vec r = P.p4a(qb(al), mod_scale_a(A, a, qb(i)),
                                          qb(j), b);
                            r = vec_sub(r, A.mul(a, P.p4a(qb(al), qb(i),
                                                          qb(j), b)));
                            r = vec_sub(r, A.mul(t.actQ(qb(al), a),
                                                 P.p3a(qb(i), qb(j), b)));
                            c.add(r, "L2" + tuple_name({qn(al), A.names[u],
                                                        qn(i), qn(j),
                                                        A.names[v]}));
                        }
                        for (std::size_t k = 0; k < t.nQ; ++k) {
                            // {alpha;a xi,eta;kappa}
                            ModEl r = P.p4q(qb(al),
                                            mod_scale_a(A, a, qb(i)), qb(j),
                                            qb(k));
                            r = mod_sub(r, mod_scale_a(A, a,
                                                       P.p4q(qb(al), qb(i),
                                                             qb(j), qb(k))));
                            r = mod_sub(r,
                                        mod_scale_a(A, t.actQ(qb(al), a),
                                                    P.p3q(qb(i), qb(j),
                                                          qb(k))));
                            c.add(mod_flatten(r),
                                  "L3" + tuple_name({qn(al), A.names[u],
                                                     qn(i), qn(j), qn(k)}));
                            // {alpha;xi,eta;a kappa}
                            ModEl r2 = P.p4q(qb(al), qb(i), qb(j),
                                             mod_scale_a(A, a, qb(k)));
                            r2 = mod_sub(r2,
                                         mod_scale_a(A, a,
                                                     P.p4q(qb(al), qb(i),
                                                           qb(j), qb(k))));
                            r2 = mod_sub(r2,
                                         mod_scale_a(A,
                                                     P.p4a(qb(al), qb(i),
                                                           qb(j), a),
                                                     qb(k)));
                            c.add(mod_flatten(r2),
                                  "L4" + tuple_name({qn(al), qn(i), qn(j),
                                                     A.names[u], qn(k)}));
                        }
                        for (std::size_t be = 0; be < t.nQ; ++be) {
                            for (std::size_t v = 0; v < A.dim; ++v) {
                                const AEl b = A.basis(v);
                                // {alpha;a beta;xi,eta;b}
                                Vec r = P.p5a(qb(al),
                                              mod_scale_a(A, a, qb(be)),
                                              qb(i), qb(j), b);
                                r = vec_sub(r,
                                            A.mul(a, P.p5a(qb(al), qb(be),
                                                           qb(i), qb(j),
                                                           b)));
                                r = vec_sub(r,
                                            A.mul(t.actQ(qb(al), a),
                                                  P.p4a(qb(be), qb(i),
                                                        qb(j), b)));
                                c.add(r, "L5" + tuple_name({qn(al),
                                                            A.names[u],
                                                            qn(be)}));
                                // {alpha;beta;a xi,eta;b}
                                Vec r2 = P.p5a(qb(al), qb(be),
                                               mod_scale_a(A, a, qb(i)),
                                               qb(j), b);
                                r2 = vec_sub(r2,
                                             A.mul(a,
                                                   P.p5a(qb(al), qb(be),
                                                         qb(i), qb(j), b)));
                                r2 = vec_sub(
                                    r2,
                                    A.mul(t.actQ(qb(al),
                                                 t.actQ(qb(be), a)),
                                          P.p3a(qb(i), qb(j), b)));
                                r2 = vec_sub(r2,
                                             A.mul(t.actQ(qb(be), a),
                                                   P.p4a(qb(al), qb(i),
                                                         qb(j), b)));
                                r2 = vec_sub(r2,
                                             A.mul(t.actQ(qb(al), a),
                                                   P.p4a(qb(be), qb(i),
                                                         qb(j), b)));
                                c.add(r2, "L6" + tuple_name({qn(al), qn(be),
                                                             A.names[u],
                                                             qn(i), qn(j)}));
                            }
                            for (std::size_t k = 0; k < t.nQ; ++k) {
                                // {alpha;a beta;xi,eta;gamma}
                                ModEl r = P.p5q(qb(al),
                                                mod_scale_a(A, a, qb(be)),
                                                qb(i), qb(j), qb(k));
                                r = mod_sub(r,
                                            mod_scale_a(A, a,
                                                        P.p5q(qb(al), qb(be),
                                                              qb(i), qb(j),
                                                              qb(k))));
                                r = mod_sub(r,
                                            mod_scale_a(
                                                A, t.actQ(qb(al), a),
                                                P.p4q(qb(be), qb(i), qb(j),
                                                      qb(k))));
                                c.add(mod_flatten(r),
                                      "L7" + tuple_name({qn(al), A.names[u],
                                                         qn(be)}));
                                // {alpha;beta;a xi,eta;gamma}
                                ModEl r2 = P.p5q(qb(al), qb(be),
                                                 mod_scale_a(A, a, qb(i)),
                                                 qb(j), qb(k));
                                r2 = mod_sub(
                                    r2, mod_scale_a(A, a,
                                                    P.p5q(qb(al), qb(be),
                                                          qb(i), qb(j),
                                                          qb(k))));
                                r2 = mod_sub(
                                    r2, mod_scale_a(
                                            A,
                                            t.actQ(qb(al),
                                                   t.actQ(qb(be), a)),
                                            P.p3q(qb(i), qb(j), qb(k))));
                                r2 = mod_sub(
                                    r2, mod_scale_a(A, t.actQ(qb(be), a),
                                                    P.p4q(qb(al), qb(i),
                                                          qb(j), qb(k))));
                                r2 = mod_sub(
                                    r2, mod_scale_a(A, t.actQ(qb(al), a),
                                                    P.p4q(qb(be), qb(i),
                                                          qb(j), qb(k))));
                                c.add(mod_flatten(r2),
                                      "L8" + tuple_name({qn(al), qn(be),
                                                         A.names[u], qn(i),
                                                         qn(j)}));
                                // {alpha;beta;xi,eta;a gamma}
                                ModEl r3 = P.p5q(qb(al), qb(be), qb(i),
                                                 qb(j),
                                                 mod_scale_a(A, a, qb(k)));
                                r3 = mod_sub(
                                    r3, mod_scale_a(A, a,
                                                    P.p5q(qb(al), qb(be),
                                                          qb(i), qb(j),
                                                          qb(k))));
                                r3 = mod_sub(
                                    r3, mod_scale_a(A,
                                                    P.p5a(qb(al), qb(be),
                                                          qb(i), qb(j), a),
                                                    qb(k)));
                                c.add(mod_flatten(r3),
                                      "L9" + tuple_name({qn(al), qn(be),
                                                         qn(i), qn(j),
                                                         A.names[u],
                                                         qn(k)}));
                            }
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }

    // The compatibility identities rewritten through the products.
    {
        ResidualCheck c("prod.compat.1", "anchor interchange via products");
        for (std::size_t x = 0; x < t.nQ; ++x) {
            for (std::size_t i = 0; i < t.nQ; ++i) {
                for (std::size_t j = 0; j < t.nQ; ++j) {
                    for (std::size_t u = 0; u < A.dim; ++u) {
                        const AEl a = A.basis(u);
                        Vec r = t.actQ(qb(x), P.p3a(qb(i), qb(j), a));
                        r = vec_sub(r, P.p3a(qb(i), qb(j),
                                             t.actQ(qb(x), a)));
                        r = vec_sub(r, P.p4a(qb(x), qb(i), qb(j), a));
                        r = vec_add(r, t.actQ(P.p3q(qb(i), qb(j), qb(x)),
                                              a));
                        c.add(r, tuple_name({qn(x), qn(i), qn(j),
                                             A.names[u]}));
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.compat.2",
                        "pairing action as a bracket derivation");
        for (std::size_t al = 0; al < t.nQ; ++al) {
            for (std::size_t be = 0; be < t.nQ; ++be) {
                for (std::size_t i = 0; i < t.nQ; ++i) {
                    for (std::size_t j = 0; j < t.nQ; ++j) {
                        ModEl r = P.p3q(qb(al), qb(be),
                                        t.brQE(qb(i), qb(j)));
                        r = mod_sub(r, t.brQE(P.p3q(qb(al), qb(be), qb(i)),
                                              qb(j)));
                        r = mod_sub(r, t.brQE(qb(i), P.p3q(qb(al), qb(be),
                                                           qb(j))));
                        r = mod_add(r, P.p4q(qb(i), qb(al), qb(be), qb(j)));
                        r = mod_sub(r, P.p4q(qb(j), qb(al), qb(be), qb(i)));
                        c.add(mod_flatten(r),
                              tuple_name({qn(al), qn(be), qn(i), qn(j)}));
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.compat.3",
                        "double-pairing commutator on products");
        for (std::size_t x = 0; x < t.nQ; ++x) {
            for (std::size_t al = 0; al < t.nQ; ++al) {
                for (std::size_t be = 0; be < t.nQ; ++be) {
                    for (std::size_t ga = 0; ga < t.nQ; ++ga) {
                        for (std::size_t ze = 0; ze < t.nQ; ++ze) {
                            for (std::size_t ka = 0; ka < t.nQ; ++ka) {
                                const ModEl xh =
                                    t.delE(qb(al), qb(be));
                                const ModEl yh =
                                    t.delE(qb(ga), qb(ze));
                                ModEl lhs = t.cHQ(
                                    t.cQH(qb(x), t.brHE(xh, yh)), qb(ka));
                                ModEl rhs = P.p4q(qb(x), qb(al), qb(be),
                                                  P.p3q(qb(ga), qb(ze),
                                                        qb(ka)));
                                rhs = mod_sub(rhs,
                                              P.p3q(qb(ga), qb(ze),
                                                    P.p4q(qb(x), qb(al),
                                                          qb(be), qb(ka))));
                                rhs = mod_add(rhs,
                                              P.p3q(qb(al), qb(be),
                                                    P.p4q(qb(x), qb(ga),
                                                          qb(ze), qb(ka))));
                                rhs = mod_sub(rhs,
                                              P.p4q(qb(x), qb(ga), qb(ze),
                                                    P.p3q(qb(al), qb(be),
                                                          qb(ka))));
                                rhs = mod_sub(rhs,
                                              P.p4q(P.p3q(qb(al), qb(be),
                                                          qb(x)),
                                                    qb(ga), qb(ze), qb(ka)));
                                rhs = mod_add(rhs,
                                              P.p4q(P.p3q(qb(ga), qb(ze),
                                                          qb(x)),
                                                    qb(al), qb(be), qb(ka)));
                                c.add(mod_flatten(mod_sub(lhs, rhs)),
                                      tuple_name({qn(x), qn(al), qn(be),
                                                  qn(ga), qn(ze), qn(ka)}));
                            }
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.compat.4",
                        "Q anchor commutator via the triple product");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t u = 0; u < A.dim; ++u) {
                    const AEl a = A.basis(u);
                    Vec r = vec_sub(t.actQ(qb(i), t.actQ(qb(j), a)),
                                    t.actQ(qb(j), t.actQ(qb(i), a)));
                    r = vec_sub(r, t.actQ(t.brQE(qb(i), qb(j)), a));
                    r = vec_sub(r, P.p3a(qb(i), qb(j), a));
                    c.add(r, tuple_name({qn(i), qn(j), A.names[u]}));
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.compat.5",
                        "bracketed first slot of the quadruple product");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t al = 0; al < t.nQ; ++al) {
                    for (std::size_t be = 0; be < t.nQ; ++be) {
                        for (std::size_t ga = 0; ga < t.nQ; ++ga) {
                            ModEl lhs = P.p4q(t.brQE(qb(i), qb(j)),
                                              qb(al), qb(be), qb(ga));
                            ModEl rhs = P.p5q(qb(i), qb(j), qb(al), qb(be),
                                              qb(ga));
                            rhs = mod_sub(rhs,
                                          P.p5q(qb(j), qb(i), qb(al),
                                                qb(be), qb(ga)));
                            rhs = mod_sub(rhs,
                                          P.p3q(P.p3q(qb(al), qb(be),
                                                      qb(i)),
                                                qb(j), qb(ga)));
                            rhs = mod_sub(rhs,
                                          P.p3q(qb(i),
                                                P.p3q(qb(al), qb(be),
                                                      qb(j)),
                                                qb(ga)));
                            rhs = mod_add(rhs,
                                          P.p3q(qb(al), qb(be),
                                                P.p3q(qb(i), qb(j),
                                                      qb(ga))));
                            rhs = mod_sub(rhs,
                                          P.p3q(qb(i), qb(j),
                                                P.p3q(qb(al), qb(be),
                                                      qb(ga))));
                            c.add(mod_flatten(mod_sub(lhs, rhs)),
                                  tuple_name({qn(i), qn(j), qn(al), qn(be),
                                              qn(ga)}));
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.compat.6",
                        "Q Jacobiator via the triple product");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    ModEl r = t.qZero();
                    const std::size_t v[3] = {i, j, k};
                    for (int cyc = 0; cyc < 3; ++cyc) {
                        const std::size_t a = v[cyc];
                        const std::size_t b = v[(cyc + 1) % 3];
                        const std::size_t w = v[(cyc + 2) % 3];
                        r = mod_add(r, t.brQE(t.brQE(qb(a), qb(b)), qb(w)));
                        r = mod_add(r, P.p3q(qb(a), qb(b), qb(w)));
                    }
                    c.add(mod_flatten(r),
                          tuple_name({qn(i), qn(j), qn(k)}));
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.compat.7",
                        "cyclic triple-product exchange");
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t k = 0; k < t.nQ; ++k) {
                    for (std::size_t ka = 0; ka < t.nQ; ++ka) {
                        ModEl lhs = t.qZero();
                        ModEl rhs = t.qZero();
                        const std::size_t v[3] = {i, j, k};
                        for (int cyc = 0; cyc < 3; ++cyc) {
                            const std::size_t a = v[cyc];
                            const std::size_t b = v[(cyc + 1) % 3];
                            const std::size_t w = v[(cyc + 2) % 3];
                            lhs = mod_add(lhs,
                                          P.p3q(t.brQE(qb(a), qb(b)), qb(w),
                                                qb(ka)));
                            rhs = mod_add(rhs,
                                          P.p4q(qb(a), qb(b), qb(w),
                                                qb(ka)));
                        }
                        c.add(mod_flatten(mod_sub(lhs, rhs)),
                              tuple_name({qn(i), qn(j), qn(k), qn(ka)}));
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    {
        ResidualCheck c("prod.flat",
                        "flatness expressed through nested triple products");
        for (std::size_t al = 0; al < t.nQ; ++al) {
            for (std::size_t be = 0; be < t.nQ; ++be) {
                for (std::size_t i = 0; i < t.nQ; ++i) {
                    for (std::size_t j = 0; j < t.nQ; ++j) {
                        const ModEl x = t.delE(qb(al), qb(be));
                        const ModEl y = t.delE(qb(i), qb(j));
                        ModEl lhs = t.cHQ(t.brHE(x, y), qb(i));
                        ModEl rhs = P.p3q(qb(al), qb(be),
                                          P.p3q(qb(i), qb(j), qb(i)));
                        rhs = mod_sub(rhs,
                                      P.p3q(qb(i), qb(j),
                                            P.p3q(qb(al), qb(be), qb(i))));
                        c.add(mod_flatten(mod_sub(lhs, rhs)),
                              tuple_name({qn(al), qn(be), qn(i), qn(j)}));
                    }
                }
            }
        }
        rep.checks.push_back(c.result());
    }
    return rep;
}

}  // namespace lrt
