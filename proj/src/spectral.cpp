#include "lrt/spectral.hpp"

#include <utility>

#include "lrt/forms.hpp"
#include "lrt/mc.hpp"

namespace lrt {

Subspace FilteredComplex::filt_at(long l, long m) const {
    if (m < 0 || static_cast<std::size_t>(m) >= length())
        return Subspace(0);
    const std::size_t dim_m = dims[static_cast<std::size_t>(m)];
    if (l >= static_cast<long>(levels())) return Subspace(dim_m);
    if (l <= 0) return Subspace::full(dim_m);
    return filt[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
}

std::size_t SpectralPage::dim_pq(long p, long q) const {
    const long l = static_cast<long>(p_sign) * (p - p_base);
    const long m = q - q_base + l;
    if (l < 0 || l >= static_cast<long>(levels) || m < 0 ||
        m >= static_cast<long>(length))
        return 0;
    return dims[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
}

Matrix SpectralPage::d_pq(long p, long q) const {
    const long l = static_cast<long>(p_sign) * (p - p_base);
    const long m = q - q_base + l;
    if (l < 0 || l >= static_cast<long>(levels) || m < 0 ||
        m >= static_cast<long>(length))
        return Matrix(0, 0);
    return d[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
}

std::vector<std::size_t> SpectralPage::totals() const {
    std::vector<std::size_t> out(length, 0);
    for (std::size_t l = 0; l < levels; ++l)
        for (std::size_t m = 0; m < length; ++m) out[m] += dims[l][m];
    return out;
}

namespace {

// Z_r(l,m); r = -1 means the plain filtration step F_l C^m.
Subspace z_space(const FilteredComplex& fc, long r, long l, long m) {
    if (m < 0 || static_cast<std::size_t>(m) >= fc.length())
        return Subspace(0);
    const Subspace f = fc.filt_at(l, m);
    if (r < 0) return f;
    if (static_cast<std::size_t>(m) + 1 >= fc.length()) return f;
    const Subspace target = fc.filt_at(l + r, m + 1);
    return f.intersect(
        target.preimage_under(fc.d[static_cast<std::size_t>(m)]));
}

void validate(const FilteredComplex& fc) {
    const std::size_t len = fc.length();
    if (fc.d.size() != len)
        throw std::invalid_argument("FilteredComplex: d/dims size mismatch");
    for (std::size_t m = 0; m < len; ++m) {
        const std::size_t next = m + 1 < len ? fc.dims[m + 1] : 0;
        if (fc.d[m].cols() != fc.dims[m] || fc.d[m].rows() != next)
            throw std::invalid_argument("FilteredComplex: block shape");
        if (m + 1 < len && !(fc.d[m + 1] * fc.d[m]).is_zero())
            throw std::invalid_argument(
                "FilteredComplex: differential does not square to zero");
    }
    for (std::size_t l = 0; l < fc.levels(); ++l) {
        if (fc.filt[l].size() != len)
            throw std::invalid_argument("FilteredComplex: filt length");
        for (std::size_t m = 0; m < len; ++m) {
            if (fc.filt[l][m].ambient_dim() != fc.dims[m])
                throw std::invalid_argument("FilteredComplex: filt ambient");
            if (l == 0 && fc.filt[0][m].dim() != fc.dims[m])
                throw std::invalid_argument(
                    "FilteredComplex: level 0 must be the full space");
            if (l > 0 && !fc.filt[l - 1][m].contains(fc.filt[l][m]))
                throw std::invalid_argument(
                    "FilteredComplex: filtration not nested");
            if (m + 1 < len) {
                const Subspace img = fc.filt[l][m].image_under(fc.d[m]);
                if (!fc.filt[l][m + 1].contains(img))
                    throw FiltrationNotPreserved(
                        "FilteredComplex: differential leaves level " +
                        std::to_string(l) + " at degree " +
                        std::to_string(m));
            }
        }
    }
}

}  // namespace

std::vector<SpectralPage> pages(const FilteredComplex& fc,
                                std::size_t r_max) {
    validate(fc);
    const std::size_t len = fc.length();
    const std::size_t lev = fc.levels();
    std::vector<SpectralPage> out;
    out.reserve(r_max + 1);
    for (std::size_t r = 0; r <= r_max; ++r) {
        SpectralPage pg;
        pg.r = r;
        pg.levels = lev;
        pg.length = len;
        pg.p_sign = fc.p_sign;
        pg.p_base = fc.p_base;
        pg.q_base = fc.q_base;
        pg.dims.assign(lev, std::vector<std::size_t>(len, 0));
        pg.cells.assign(lev, std::vector<Subquotient>(len));
        pg.d.assign(lev, std::vector<Matrix>(len));
        const long rr = static_cast<long>(r);
        for (std::size_t l = 0; l < lev; ++l)
            for (std::size_t m = 0; m < len; ++m) {
                const long ll = static_cast<long>(l);
                const long mm = static_cast<long>(m);
                const Subspace z = z_space(fc, rr, ll, mm);
                const Subspace b =
                    z_space(fc, rr - 1, ll + 1, mm)
                        .sum(mm > 0 ? z_space(fc, rr - 1, ll - rr + 1, mm - 1)
                                          .image_under(fc.d[m - 1])
                                    : Subspace(fc.dims[m]));
                pg.cells[l][m] = subquotient(z, b.intersect(z));
                pg.dims[l][m] = pg.cells[l][m].dim();
            }
        for (std::size_t l = 0; l < lev; ++l)
            for (std::size_t m = 0; m < len; ++m) {
                const std::size_t src = pg.dims[l][m];
                const bool in_range =
                    l + r < lev && m + 1 < len;
                const std::size_t dst =
                    in_range ? pg.dims[l + r][m + 1] : 0;
                Matrix mat(dst, src);
                if (dst > 0)
                    for (std::size_t j = 0; j < src; ++j) {
                        const Vec img =
                            fc.d[m].apply(pg.cells[l][m].reps[j]);
                        const Vec co = pg.cells[l + r][m + 1].coords(img);
                        for (std::size_t i = 0; i < dst; ++i)
                            mat.at(i, j) = co[i];
                    }
                pg.d[l][m] = std::move(mat);
            }
        out.push_back(std::move(pg));
    }
    return out;
}

std::vector<std::size_t> cohomology_of(const FilteredComplex& fc) {
    validate(fc);
    const std::size_t len = fc.length();
    std::vector<std::size_t> out(len, 0);
    for (std::size_t m = 0; m < len; ++m) {
        const std::size_t cycles = fc.dims[m] - rank(fc.d[m]);
        const std::size_t bdry = m > 0 ? rank(fc.d[m - 1]) : 0;
        out[m] = cycles - bdry;
    }
    return out;
}

SuiteReport convergence_check(const FilteredComplex& fc,
                              const std::vector<SpectralPage>& pg) {
    SuiteReport rep;
    rep.instance = fc.name;
    rep.suite = "spectral";
    {
        CheckResult c;
        c.id = "ss.pagesquare";
        c.ref = "page differential squares to zero";
        for (const auto& page : pg)
            for (std::size_t l = 0; l < page.levels; ++l)
                for (std::size_t m = 0; m < page.length; ++m) {
                    if (l + page.r >= page.levels || m + 1 >= page.length)
                        continue;
                    const Matrix comp =
                        page.d[l + page.r][m + 1] * page.d[l][m];
                    if (!comp.is_zero()) {
                        c.pass = false;
                        c.residual_nnz += comp.nnz();
                        if (c.witness.empty())
                            c.witness = "page " + std::to_string(page.r) +
                                        " cell " + std::to_string(l) + "," +
                                        std::to_string(m);
                    }
                }
        rep.checks.push_back(c);
    }
    {
        CheckResult c;
        c.id = "ss.collapse";
        c.ref = "cell dimensions decrease monotonically across pages";
        for (std::size_t r = 1; r < pg.size(); ++r)
            for (std::size_t l = 0; l < pg[r].levels; ++l)
                for (std::size_t m = 0; m < pg[r].length; ++m)
                    if (pg[r].dims[l][m] > pg[r - 1].dims[l][m]) {
                        c.pass = false;
                        ++c.residual_nnz;
                        if (c.witness.empty())
                            c.witness = "page " + std::to_string(r) +
                                        " cell " + std::to_string(l) + "," +
                                        std::to_string(m);
                    }
        rep.checks.push_back(c);
    }
    {
        CheckResult c;
        c.id = "ss.recursion";
        c.ref = "each page is the homology of the previous one";
        for (std::size_t r = 1; r < pg.size(); ++r) {
            const SpectralPage& prev = pg[r - 1];
            for (std::size_t l = 0; l < prev.levels; ++l)
                for (std::size_t m = 0; m < prev.length; ++m) {
                    const std::size_t out_rank = rank(prev.d[l][m]);
                    std::size_t in_rank = 0;
                    if (l >= prev.r && m > 0)
                        in_rank = rank(prev.d[l - prev.r][m - 1]);
                    const std::size_t expect =
                        prev.dims[l][m] - out_rank - in_rank;
                    if (pg[r].dims[l][m] != expect) {
                        c.pass = false;
                        ++c.residual_nnz;
                        if (c.witness.empty())
                            c.witness = "page " + std::to_string(r) +
                                        " cell " + std::to_string(l) + "," +
                                        std::to_string(m);
                    }
                }
        }
        rep.checks.push_back(c);
    }
    {
        CheckResult c;
        c.id = "ss.convergence";
        c.ref = "limit totals equal the cohomology of the total complex";
        const std::vector<std::size_t> lim = pg.back().totals();
        const std::vector<std::size_t> coh = cohomology_of(fc);
        for (std::size_t m = 0; m < coh.size(); ++m)
            if (lim[m] != coh[m]) {
                c.pass = false;
                ++c.residual_nnz;
                if (c.witness.empty())
                    c.witness = "degree " + std::to_string(m) + ": " +
                                std::to_string(lim[m]) + " vs " +
                                std::to_string(coh[m]);
            }
        rep.checks.push_back(c);
    }
    return rep;
}

namespace {

// Assembles a totalized complex out of bigraded blocks.  `grid` lists the
// (p,q) cells per internal degree m in a fixed order; `dim` gives cell
// dimensions, and each operator contributes its block wherever source and
// target cells are both present.
struct TotalAssembly {
    std::vector<std::vector<std::pair<long, long>>> grid;  // per m
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> offs;  // per m, per cell

    std::size_t find(std::size_t m, long p, long q,
                     std::size_t* off) const {
        for (std::size_t i = 0; i < grid[m].size(); ++i)
            if (grid[m][i] == std::make_pair(p, q)) {
                *off = offs[m][i];
                return i;
            }
        return grid[m].size();
    }
};

std::vector<Matrix> assemble_total(
    const TotalAssembly& asmb,
    const std::vector<const BigradedOp*>& ops,
    const TripleData& t) {
    const std::size_t len = asmb.dims.size();
    std::vector<Matrix> d;
    d.reserve(len);
    for (std::size_t m = 0; m < len; ++m) {
        const std::size_t next = m + 1 < len ? asmb.dims[m + 1] : 0;
        Matrix big(next, asmb.dims[m]);
        if (m + 1 < len)
            for (std::size_t i = 0; i < asmb.grid[m].size(); ++i) {
                const auto [p, q] = asmb.grid[m][i];
                const std::size_t coff = asmb.offs[m][i];
                for (const BigradedOp* op : ops) {
                    const long tp = p + op->dp, tq = q + op->dq;
                    std::size_t roff = 0;
                    if (asmb.find(m + 1, tp, tq, &roff) ==
                        asmb.grid[m + 1].size())
                        continue;
                    const Matrix blk = op->block_at(p, q);
                    for (std::size_t r = 0; r < blk.rows(); ++r)
                        for (std::size_t cidx = 0; cidx < blk.cols(); ++cidx)
                            big.at(roff + r, coff + cidx) =
                                big.at(roff + r, coff + cidx) +
                                blk.at(r, cidx);
                }
            }
        d.push_back(std::move(big));
    }
    (void)t;
    return d;
}

// Coordinate filtration: level l keeps the cells selected by `keep`.
std::vector<std::vector<Subspace>> coordinate_filtration(
    const TotalAssembly& asmb, std::size_t levels,
    bool (*keep)(long p, long q, long l, long nq)) {
    const std::size_t len = asmb.dims.size();
    std::vector<std::vector<Subspace>> filt;
    filt.reserve(levels);
    const long nq = 0;
    (void)nq;
    for (std::size_t l = 0; l < levels; ++l) {
        std::vector<Subspace> row;
        row.reserve(len);
        for (std::size_t m = 0; m < len; ++m) {
            std::vector<Vec> gens;
            for (std::size_t i = 0; i < asmb.grid[m].size(); ++i) {
                const auto [p, q] = asmb.grid[m][i];
                if (!keep(p, q, static_cast<long>(l),
                          static_cast<long>(levels) - 1))
                    continue;
                const std::size_t off = asmb.offs[m][i];
                const std::size_t cell_dim =
                    (i + 1 < asmb.offs[m].size() ? asmb.offs[m][i + 1]
                                                 : asmb.dims[m]) -
                    off;
                for (std::size_t k = 0; k < cell_dim; ++k) {
                    Vec e(asmb.dims[m], Rat(0));
                    e[off + k] = Rat(1);
                    gens.push_back(std::move(e));
                }
            }
            row.push_back(Subspace::span(gens, asmb.dims[m]));
        }
        filt.push_back(std::move(row));
    }
    return filt;
}

}  // namespace

FilteredComplex triple_ss(const TripleData& t) {
    const long nq = static_cast<long>(t.nQ);
    const long nh = static_cast<long>(t.nH);
    TotalAssembly asmb;
    const std::size_t len = static_cast<std::size_t>(nq + nh) + 1;
    asmb.grid.resize(len);
    asmb.offs.resize(len);
    asmb.dims.assign(len, 0);
    for (std::size_t m = 0; m < len; ++m)
        for (long p = 0; p <= nq; ++p) {
            const long q = static_cast<long>(m) - p;
            if (q < 0 || q > nh) continue;
            asmb.grid[m].push_back({p, q});
            asmb.offs[m].push_back(asmb.dims[m]);
            asmb.dims[m] += w_dim(t, p, q);
        }
    const BigradedOp d0 = build_d0(t);
    const BigradedOp d1 = build_d1(t);
    const BigradedOp d2 = build_d2(t);
    FilteredComplex fc;
    fc.name = t.name + ":triple";
    fc.dims = asmb.dims;
    fc.d = assemble_total(asmb, {&d0, &d1, &d2}, t);
    fc.filt = coordinate_filtration(
        asmb, static_cast<std::size_t>(nq) + 1,
        [](long p, long, long l, long) { return p >= l; });
    fc.p_sign = 1;
    fc.p_base = 0;
    fc.q_base = 0;
    return fc;
}

FilteredComplex bv_ss(const GBig& g, const BigradedOp& delta) {
    const TripleData& t = g.t;
    const long nq = static_cast<long>(t.nQ);
    const long nh = static_cast<long>(t.nH);
    TotalAssembly asmb;
    const std::size_t len = static_cast<std::size_t>(nq + nh) + 1;
    asmb.grid.resize(len);
    asmb.offs.resize(len);
    asmb.dims.assign(len, 0);
    // internal degree m = q - p + rank Q, cells ordered by ascending p.
    for (std::size_t m = 0; m < len; ++m)
        for (long p = 0; p <= nq; ++p) {
            const long q = static_cast<long>(m) - nq + p;
            if (q < 0 || q > nh) continue;
            asmb.grid[m].push_back({p, q});
            asmb.offs[m].push_back(asmb.dims[m]);
            asmb.dims[m] += w_dim(t, p, q);
        }
    FilteredComplex fc;
    fc.name = t.name + ":bv";
    fc.dims = asmb.dims;
    fc.d = assemble_total(asmb, {&g.d, &delta, &g.psi}, t);
    // level l = rank Q - p: the differential never raises p.
    fc.filt = coordinate_filtration(
        asmb, static_cast<std::size_t>(nq) + 1,
        [](long p, long, long l, long top) { return p <= top - l; });
    fc.p_sign = -1;
    fc.p_base = nq;
    fc.q_base = 0;
    return fc;
}

}  // namespace lrt
