#include "lrt/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace lrt {

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a) {
        if (x != 0) return false;
    }
    return true;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == cols);
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(m_cols);
    for (std::size_t j = 0; j < m_cols; ++j) r[j] = at(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::operator*(const Matrix& other) const {
    assert(m_cols == other.m_rows);
    Matrix r(m_rows, other.m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t k = 0; k < m_cols; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < other.m_cols; ++j) {
                r.at(i, j) += v * other.at(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
    assert(m_rows == other.m_rows && m_cols == other.m_cols);
    Matrix r(m_rows, m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            r.at(i, j) = at(i, j) + other.at(i, j);
        }
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
    assert(m_rows == other.m_rows && m_cols == other.m_cols);
    Matrix r(m_rows, m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            r.at(i, j) = at(i, j) - other.at(i, j);
        }
    }
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r(m_rows, m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) r.at(i, j) = c * at(i, j);
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : m_data) {
        if (x != 0) return false;
    }
    return true;
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& x : m_data) {
        if (x != 0) ++n;
    }
    return n;
}

Vec Matrix::apply(const Vec& v) const {
    assert(v.size() == m_cols);
    Vec r(m_rows, Rat(0));
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

Rref rref(const Matrix& m) {
    Rref out;
    out.mat = m;
    Matrix& a = out.mat;
    std::size_t pr = 0;  // current pivot row
    for (std::size_t pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        // Deterministic pivot choice: first row with a nonzero entry.
        std::size_t piv = pr;
        while (piv < a.rows() && a.at(piv, pc) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != pr) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::swap(a.at(piv, j), a.at(pr, j));
            }
        }
        const Rat inv = Rat(1) / a.at(pr, pc);
        for (std::size_t j = pc; j < a.cols(); ++j) a.at(pr, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pr || a.at(i, pc) == 0) continue;
            const Rat f = a.at(i, pc);
            for (std::size_t j = pc; j < a.cols(); ++j) {
                a.at(i, j) -= f * a.at(pr, j);
            }
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::vector<Vec> kernel(const Matrix& m) {
    const Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t pc : r.pivot_cols) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.cols(), Rat(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            v[r.pivot_cols[i]] = -r.mat.at(i, fc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    assert(b.size() == m.rows());
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const Rref r = rref(aug);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == m.cols()) return std::nullopt;  // inconsistent
    }
    Vec x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        x[r.pivot_cols[i]] = r.mat.at(i, m.cols());
    }
    return x;
}

Subspace::Subspace(std::size_t ambient_dim) : m_ambient(ambient_dim) {}

Subspace Subspace::span(const std::vector<Vec>& vectors,
                        std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    const Rref r = rref(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        s.m_basis.push_back(r.mat.row(i));
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec v(ambient_dim, Rat(0));
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(rows, ambient_dim);
}

bool Subspace::contains(const Vec& v) const {
    assert(v.size() == m_ambient);
    // Reduce v against the RREF basis rows; membership iff residual is zero.
    Vec w = v;
    for (const Vec& b : m_basis) {
        std::size_t lead = 0;
        while (lead < m_ambient && b[lead] == 0) ++lead;
        if (lead < m_ambient && w[lead] != 0) {
            w = vec_sub(w, vec_scale(w[lead], b));
        }
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& b : other.m_basis) {
        if (!contains(b)) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    assert(m_ambient == other.m_ambient);
    std::vector<Vec> all = m_basis;
    all.insert(all.end(), other.m_basis.begin(), other.m_basis.end());
    return span(all, m_ambient);
}

Matrix Subspace::annihilator() const {
    // Null space of the basis-row matrix: c with B c = 0 are exactly the
    // linear functionals (via the dot product) vanishing on this subspace.
    const Matrix b = Matrix::from_rows(m_basis, m_ambient);
    return Matrix::from_rows(kernel(b), m_ambient);
}

Subspace Subspace::intersect(const Subspace& other) const {
    assert(m_ambient == other.m_ambient);
    // v lies in both iff both annihilators kill it.
    const Matrix a1 = annihilator();
    const Matrix a2 = other.annihilator();
    Matrix stacked(a1.rows() + a2.rows(), m_ambient);
    for (std::size_t i = 0; i < a1.rows(); ++i) {
        for (std::size_t j = 0; j < m_ambient; ++j) {
            stacked.at(i, j) = a1.at(i, j);
        }
    }
    for (std::size_t i = 0; i < a2.rows(); ++i) {
        for (std::size_t j = 0; j < m_ambient; ++j) {
            stacked.at(a1.rows() + i, j) = a2.at(i, j);
        }
    }
    return span(kernel(stacked), m_ambient);
}

Subspace Subspace::preimage_under(const Matrix& a) const {
    assert(a.rows() == m_ambient);
    return Subspace::span(kernel(annihilator() * a), a.cols());
}

Subspace Subspace::image_under(const Matrix& a) const {
    assert(a.cols() == m_ambient);
    std::vector<Vec> imgs;
    for (const Vec& b : m_basis) imgs.push_back(a.apply(b));
    return span(imgs, a.rows());
}

Vec Subquotient::coords(const Vec& v) const {
    const std::size_t n = ambient_dim;
    const std::size_t nb = b_basis.size();
    const std::size_t nr = reps.size();
    // Solve [b_basis^T | reps^T] x = v, return the reps block.
    Matrix m(n, nb + nr);
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = b_basis[j][i];
    }
    for (std::size_t j = 0; j < nr; ++j) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, nb + j) = reps[j][i];
    }
    auto x = solve(m, v);
    if (!x) {
        throw std::invalid_argument(
            "Subquotient::coords: vector not in the total subspace");
    }
    Vec c(nr);
    for (std::size_t j = 0; j < nr; ++j) c[j] = (*x)[nb + j];
    return c;
}

Subquotient subquotient(const Subspace& z, const Subspace& b) {
    assert(z.ambient_dim() == b.ambient_dim());
    assert(z.contains(b));
    Subquotient q;
    q.ambient_dim = z.ambient_dim();
    q.b_basis = b.basis();
    // Greedily extend the basis of b by basis vectors of z (deterministic:
    // canonical RREF order of z's basis).
    std::vector<Vec> current = q.b_basis;
    std::size_t cur_rank = current.size();
    for (const Vec& v : z.basis()) {
        std::vector<Vec> trial = current;
        trial.push_back(v);
        const std::size_t r =
            rank(Matrix::from_rows(trial, q.ambient_dim));
        if (r > cur_rank) {
            current = std::move(trial);
            cur_rank = r;
            q.reps.push_back(v);
        }
    }
    return q;
}

}  // namespace lrt
