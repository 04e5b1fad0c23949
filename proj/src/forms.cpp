#include "lrt/forms.hpp"

namespace lrt {

namespace {

// Product of the idx[j]-th A-coordinates of args[j]; sets *is_zero when some
// factor (hence the product) vanishes, to allow early skipping.
AEl tuple_coeff(const BaseAlgebra& a, const std::vector<ModEl>& args,
                const std::vector<std::size_t>& idx, bool* is_zero) {
    AEl c = a.one();
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const AEl& factor = args[j][idx[j]];
        if (vec_is_zero(factor)) {
            *is_zero = true;
            return c;
        }
        c = a.mul(c, factor);
    }
    *is_zero = vec_is_zero(c);
    return c;
}

// Advances a mixed-radix odometer; returns false when it wraps around.
bool advance(std::vector<std::size_t>& digits, std::size_t radix) {
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (++digits[j] < radix) return true;
        digits[j] = 0;
    }
    return false;
}

}  // namespace

AEl eval_w(const TripleData& t, std::size_t p, std::size_t q, const Vec& f,
           const std::vector<ModEl>& qargs, const std::vector<ModEl>& hargs) {
    AEl out = t.A.zero();
    if (w_dim(t, static_cast<long>(p), static_cast<long>(q)) == 0) return out;

    std::vector<std::size_t> qi(p, 0);
    do {
        bool zq = false;
        const AEl cq = tuple_coeff(t.A, qargs, qi, &zq);
        if (zq) continue;
        std::vector<std::size_t> qs = qi;
        const int sq = sort_sign(qs);
        if (sq == 0) continue;
        const std::size_t si = combination_index(qs, t.nQ);

        std::vector<std::size_t> hi(q, 0);
        do {
            bool zh = false;
            const AEl ch = tuple_coeff(t.A, hargs, hi, &zh);
            if (zh) continue;
            std::vector<std::size_t> hs = hi;
            const int sh = sort_sign(hs);
            if (sh == 0) continue;
            const std::size_t ti = combination_index(hs, t.nH);

            AEl coef = t.A.mul(cq, ch);
            if (sq * sh < 0) coef = vec_scale(Rat(-1), coef);
            AEl slice(t.A.dim, Rat(0));
            for (std::size_t ai = 0; ai < t.A.dim; ++ai) {
                slice[ai] = f[w_index(t, p, q, si, ti, ai)];
            }
            out = vec_add(out, t.A.mul(coef, slice));
        } while (advance(hi, t.nH));
    } while (advance(qi, t.nQ));
    return out;
}

ModEl eval_alt(const BaseAlgebra& a, std::size_t rank_l, std::size_t deg,
               std::size_t rank_m, const Vec& f,
               const std::vector<ModEl>& args) {
    ModEl out(rank_m, a.zero());
    if (alt_dim(a, rank_l, static_cast<long>(deg), rank_m) == 0) return out;

    std::vector<std::size_t> li(deg, 0);
    do {
        bool z = false;
        const AEl c = tuple_coeff(a, args, li, &z);
        if (z) continue;
        std::vector<std::size_t> ls = li;
        const int s = sort_sign(ls);
        if (s == 0) continue;
        const std::size_t ti = combination_index(ls, rank_l);
        const AEl coef = s < 0 ? vec_scale(Rat(-1), c) : c;
        for (std::size_t mi = 0; mi < rank_m; ++mi) {
            AEl slice(a.dim, Rat(0));
            for (std::size_t ai = 0; ai < a.dim; ++ai) {
                slice[ai] = f[alt_index(a, rank_m, ti, mi, ai)];
            }
            out[mi] = vec_add(out[mi], a.mul(coef, slice));
        }
    } while (advance(li, rank_l));
    return out;
}

Vec alt_wedge(const BaseAlgebra& a, std::size_t rank_l, std::size_t deg_f,
              const Vec& f, std::size_t deg_g, const Vec& g) {
    const std::size_t deg = deg_f + deg_g;
    Vec out(alt_dim(a, rank_l, static_cast<long>(deg), 1), Rat(0));
    if (out.empty()) return out;

    const auto tf = combinations(rank_l, deg_f);
    const auto tg = combinations(rank_l, deg_g);
    for (std::size_t i = 0; i < tf.size(); ++i) {
        AEl fv(a.dim, Rat(0));
        for (std::size_t ai = 0; ai < a.dim; ++ai) {
            fv[ai] = f[alt_index(a, 1, i, 0, ai)];
        }
        if (vec_is_zero(fv)) continue;
        for (std::size_t j = 0; j < tg.size(); ++j) {
            AEl gv(a.dim, Rat(0));
            for (std::size_t ai = 0; ai < a.dim; ++ai) {
                gv[ai] = g[alt_index(a, 1, j, 0, ai)];
            }
            if (vec_is_zero(gv)) continue;
            std::vector<std::size_t> merged = tf[i];
            merged.insert(merged.end(), tg[j].begin(), tg[j].end());
            const int s = sort_sign(merged);
            if (s == 0) continue;
            const std::size_t ti = combination_index(merged, rank_l);
            AEl v = a.mul(fv, gv);
            if (s < 0) v = vec_scale(Rat(-1), v);
            for (std::size_t ai = 0; ai < a.dim; ++ai) {
                out[alt_index(a, 1, ti, 0, ai)] += v[ai];
            }
        }
    }
    return out;
}

Vec alt_contract(const BaseAlgebra& a, std::size_t rank_l, std::size_t deg_f,
                 const Vec& f, const ModEl& u) {
    Vec out(alt_dim(a, rank_l, static_cast<long>(deg_f) - 1, 1), Rat(0));
    if (deg_f == 0 || out.empty()) return out;

    const auto small = combinations(rank_l, deg_f - 1);
    for (std::size_t j = 0; j < small.size(); ++j) {
        AEl acc(a.dim, Rat(0));
        for (std::size_t l = 0; l < rank_l; ++l) {
            if (vec_is_zero(u[l])) continue;
            std::vector<std::size_t> full = small[j];
            full.push_back(l);
            const int s = sort_sign(full);
            if (s == 0) continue;
            const std::size_t ti = combination_index(full, rank_l);
            AEl fv(a.dim, Rat(0));
            for (std::size_t ai = 0; ai < a.dim; ++ai) {
                fv[ai] = f[alt_index(a, 1, ti, 0, ai)];
            }
            // the sign of placing u's slot first: sorting (S, l) then moving
            // l to the front costs (deg_f - 1) extra transpositions
            int sign = s;
            if ((deg_f - 1) % 2 == 1) sign = -sign;
            AEl v = a.mul(u[l], fv);
            if (sign < 0) v = vec_scale(Rat(-1), v);
            acc = vec_add(acc, v);
        }
        for (std::size_t ai = 0; ai < a.dim; ++ai) {
            out[alt_index(a, 1, j, 0, ai)] = acc[ai];
        }
    }
    return out;
}

}  // namespace lrt
