#include "lrt/algebra.hpp"

#include <cassert>

namespace lrt {

BaseAlgebra BaseAlgebra::rationals() {
    BaseAlgebra a;
    a.dim = 1;
    a.names = {"1"};
    a.mult = {{AEl{Rat(1)}}};
    a.unit = AEl{Rat(1)};
    return a;
}

AEl BaseAlgebra::basis(std::size_t i) const {
    AEl v = zero();
    v[i] = 1;
    return v;
}

AEl BaseAlgebra::mul(const AEl& a, const AEl& b) const {
    assert(a.size() == dim && b.size() == dim);
    AEl r = zero();
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            const Rat c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k) {
                if (mult[i][j][k] != 0) r[k] += c * mult[i][j][k];
            }
        }
    }
    return r;
}

AEl BaseAlgebra::scalar(const Rat& c) const {
    AEl v = unit;
    for (auto& x : v) x *= c;
    return v;
}

bool BaseAlgebra::is_valid(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (names.size() != dim || mult.size() != dim || unit.size() != dim) {
        return fail("dimension mismatch in base algebra data");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (mult[i].size() != dim) return fail("ragged multiplication table");
        for (std::size_t j = 0; j < dim; ++j) {
            if (mult[i][j].size() != dim) {
                return fail("ragged multiplication table");
            }
            if (mult[i][j] != mult[j][i]) {
                return fail("multiplication not commutative at (" +
                            names[i] + "," + names[j] + ")");
            }
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (mul(unit, basis(i)) != basis(i)) {
            return fail("unit law fails at " + names[i]);
        }
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t k = 0; k < dim; ++k) {
                if (mul(mul(basis(i), basis(j)), basis(k)) !=
                    mul(basis(i), mul(basis(j), basis(k)))) {
                    return fail("associativity fails at (" + names[i] + "," +
                                names[j] + "," + names[k] + ")");
                }
            }
        }
    }
    return true;
}

bool DerivationOfA::is_derivation(const BaseAlgebra& a,
                                  std::string* why) const {
    if (mat.rows() != a.dim || mat.cols() != a.dim) {
        if (why) *why = "derivation matrix has wrong shape";
        return false;
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) {
            const AEl lhs = apply(a.mul(a.basis(i), a.basis(j)));
            const AEl rhs = vec_add(a.mul(apply(a.basis(i)), a.basis(j)),
                                    a.mul(a.basis(i), apply(a.basis(j))));
            if (lhs != rhs) {
                if (why) {
                    *why = "Leibniz rule fails at (" + a.names[i] + "," +
                           a.names[j] + ")";
                }
                return false;
            }
        }
    }
    return true;
}

DerivationOfA zero_derivation(const BaseAlgebra& a) {
    return DerivationOfA{Matrix(a.dim, a.dim)};
}

ModEl mod_zero(std::size_t rank, const BaseAlgebra& a) {
    return ModEl(rank, a.zero());
}

ModEl mod_basis(std::size_t rank, std::size_t i, const BaseAlgebra& a) {
    ModEl m = mod_zero(rank, a);
    m[i] = a.one();
    return m;
}

ModEl mod_add(const ModEl& x, const ModEl& y) {
    assert(x.size() == y.size());
    ModEl r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = vec_add(x[i], y[i]);
    return r;
}

ModEl mod_sub(const ModEl& x, const ModEl& y) {
    assert(x.size() == y.size());
    ModEl r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = vec_sub(x[i], y[i]);
    return r;
}

ModEl mod_scale(const Rat& c, const ModEl& x) {
    ModEl r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = vec_scale(c, x[i]);
    return r;
}

ModEl mod_scale_a(const BaseAlgebra& a, const AEl& c, const ModEl& x) {
    ModEl r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a.mul(c, x[i]);
    return r;
}

bool mod_is_zero(const ModEl& x) {
    for (const auto& c : x) {
        if (!vec_is_zero(c)) return false;
    }
    return true;
}

Vec mod_flatten(const ModEl& x) {
    Vec v;
    for (const auto& c : x) v.insert(v.end(), c.begin(), c.end());
    return v;
}

ModEl mod_unflatten(const Vec& v, std::size_t rank, std::size_t dim_a) {
    assert(v.size() == rank * dim_a);
    ModEl m(rank, AEl(dim_a));
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < dim_a; ++j) m[i][j] = v[i * dim_a + j];
    }
    return m;
}

}  // namespace lrt
