#ifndef LRT_ALGEBRA_HPP
#define LRT_ALGEBRA_HPP

// The commutative base algebra A (finite dimensional over Q, given by a
// multiplication table) and free A-modules.  Elements of A are coordinate
// vectors; elements of a free A-module of rank r are r-tuples of A-elements.

#include <string>
#include <vector>

#include "lrt/linalg.hpp"

namespace lrt {

using AEl = Vec;                   // element of A, length = A.dim
using ModEl = std::vector<AEl>;    // element of a free A-module

struct BaseAlgebra {
    std::size_t dim = 1;
    std::vector<std::string> names;           // basis names, size dim
    std::vector<std::vector<AEl>> mult;       // mult[i][j] = e_i * e_j
    AEl unit;                                 // coordinates of 1

    static BaseAlgebra rationals();           // A = Q

    AEl zero() const { return AEl(dim, Rat(0)); }
    AEl one() const { return unit; }
    AEl basis(std::size_t i) const;
    AEl mul(const AEl& a, const AEl& b) const;
    AEl scalar(const Rat& c) const;           // c * 1

    // Commutativity, unit law, associativity on basis triples.
    bool is_valid(std::string* why = nullptr) const;
};

// A derivation of A, as a matrix acting on coordinate vectors.
struct DerivationOfA {
    Matrix mat;  // dim x dim

    AEl apply(const AEl& a) const { return mat.apply(a); }
    bool is_derivation(const BaseAlgebra& a, std::string* why = nullptr) const;
};

DerivationOfA zero_derivation(const BaseAlgebra& a);

// Module element helpers (free module of the given rank over A).
ModEl mod_zero(std::size_t rank, const BaseAlgebra& a);
ModEl mod_basis(std::size_t rank, std::size_t i, const BaseAlgebra& a);
ModEl mod_add(const ModEl& x, const ModEl& y);
ModEl mod_sub(const ModEl& x, const ModEl& y);
ModEl mod_scale(const Rat& c, const ModEl& x);
ModEl mod_scale_a(const BaseAlgebra& a, const AEl& c, const ModEl& x);
bool mod_is_zero(const ModEl& x);

// Flattening between ModEl and plain Q-vectors (rank * dimA coordinates,
// module index major).
Vec mod_flatten(const ModEl& x);
ModEl mod_unflatten(const Vec& v, std::size_t rank, std::size_t dim_a);

}  // namespace lrt

#endif  // LRT_ALGEBRA_HPP
