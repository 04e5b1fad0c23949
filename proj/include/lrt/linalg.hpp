#ifndef LRT_LINALG_HPP
#define LRT_LINALG_HPP

// Dense exact linear algebra over the rationals.
//
// Elimination uses deterministic pivoting: within each elimination step the
// pivot row is the first row (lowest index) whose entry in the current column
// is nonzero.  No magnitude heuristics, so every run of every routine is
// bit-for-bit reproducible.  Exactness makes pivot-size heuristics pointless;
// determinism is what matters for golden outputs.

#include <cstddef>
#include <optional>
#include <vector>

#include "lrt/rational.hpp"

namespace lrt {

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

class Matrix {
  public:
    Matrix() : m_rows(0), m_cols(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : m_rows(rows), m_cols(cols), m_data(rows * cols, Rat(0)) {}

    static Matrix identity(std::size_t n);
    // Rows of the matrix are the given vectors.
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rat& at(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const {
        return m_data[i * m_cols + j];
    }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& other) const = default;

    bool is_zero() const;
    std::size_t nnz() const;

    // Matrix-vector product (v as a column vector).
    Vec apply(const Vec& v) const;

  private:
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<Rat> m_data;
};

// Reduced row echelon form; returns the reduced matrix and the pivot columns.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the null space {v : m v = 0}, as a list of vectors, in the
// canonical order induced by the free columns of the RREF.
std::vector<Vec> kernel(const Matrix& m);

// One solution of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// A linear subspace of Q^n, stored as a canonical (RREF) row basis.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient_dim);
    static Subspace span(const std::vector<Vec>& vectors,
                         std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return m_ambient; }
    std::size_t dim() const { return m_basis.size(); }
    const std::vector<Vec>& basis() const { return m_basis; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

    // Rows annihilating exactly this subspace: v in S iff (ann) v = 0.
    Matrix annihilator() const;

    // {x : a x in S}; a maps Q^k -> Q^n with n = ambient_dim().
    Subspace preimage_under(const Matrix& a) const;

    // Image {a x : x in S_domain}; a maps the ambient space of *this.
    Subspace image_under(const Matrix& a) const;

  private:
    std::size_t m_ambient;
    std::vector<Vec> m_basis;  // RREF rows, canonical
};

// Data describing the quotient z / b for subspaces b <= z of Q^n:
// representative vectors completing a basis of b to one of z, and the
// machinery to take coordinates of any v in z modulo b.
struct Subquotient {
    std::size_t ambient_dim = 0;
    std::vector<Vec> b_basis;
    std::vector<Vec> reps;  // quotient dimension = reps.size()

    std::size_t dim() const { return reps.size(); }
    // Coordinates of v (must lie in z) with respect to reps, modulo b.
    Vec coords(const Vec& v) const;
};

Subquotient subquotient(const Subspace& z, const Subspace& b);

}  // namespace lrt

#endif  // LRT_LINALG_HPP
