#ifndef LRT_TRIPLE_HPP
#define LRT_TRIPLE_HPP

// The central data model: a commutative base algebra A together with two free
// A-modules H and Q carrying brackets, anchors into Der(A), connections of
// each module on the other, and a skew A-bilinear pairing delta from Q x Q
// into H.  Brackets and delta are stored on i<j basis pairs only (skewness by
// construction); extension of every operation to composite arguments uses the
// Leibniz/connection rules as definitions.

#include <optional>
#include <string>
#include <vector>

#include "lrt/algebra.hpp"
#include "lrt/report.hpp"

namespace lrt {

struct TripleData {
    std::string name;
    BaseAlgebra A;
    std::size_t nH = 0;
    std::size_t nQ = 0;
    std::vector<std::string> namesH;
    std::vector<std::string> namesQ;

    std::vector<DerivationOfA> anchorH;  // size nH
    std::vector<DerivationOfA> anchorQ;  // size nQ

    // Stored as full tables; only i<j is meaningful for brackets and delta
    // (accessors supply skewness), connection tables are full.
    std::vector<std::vector<ModEl>> bracketH;  // [i][j] in H, i<j
    std::vector<std::vector<ModEl>> bracketQ;  // [i][j] in Q, i<j
    std::vector<std::vector<ModEl>> delta;     // [i][j] in H, i<j
    std::vector<std::vector<ModEl>> connHQ;    // [i][j] = x_i . xi_j in Q
    std::vector<std::vector<ModEl>> connQH;    // [i][j] = xi_i . x_j in H

    // Optional volume form: the A-element omega(xi_1 ^ ... ^ xi_nQ).
    std::optional<AEl> orientation;

    // ---- construction helpers ----
    static TripleData zero(const BaseAlgebra& a, std::size_t n_h,
                           std::size_t n_q,
                           const std::vector<std::string>& names_h,
                           const std::vector<std::string>& names_q);

    ModEl hZero() const { return mod_zero(nH, A); }
    ModEl qZero() const { return mod_zero(nQ, A); }
    ModEl hBasis(std::size_t i) const { return mod_basis(nH, i, A); }
    ModEl qBasis(std::size_t i) const { return mod_basis(nQ, i, A); }

    // ---- basis accessors with skewness ----
    ModEl brH(std::size_t i, std::size_t j) const;
    ModEl brQ(std::size_t i, std::size_t j) const;
    ModEl del(std::size_t i, std::size_t j) const;

    // ---- Leibniz-extended evaluation on arbitrary elements ----
    AEl actH(const ModEl& x, const AEl& a) const;     // x(a)
    AEl actQ(const ModEl& xi, const AEl& a) const;    // xi(a)
    ModEl brHE(const ModEl& x, const ModEl& y) const;   // [x,y]_H
    ModEl brQE(const ModEl& xi, const ModEl& eta) const;
    ModEl delE(const ModEl& xi, const ModEl& eta) const;   // in H
    ModEl cHQ(const ModEl& x, const ModEl& xi) const;      // x . xi in Q
    ModEl cQH(const ModEl& xi, const ModEl& x) const;      // xi . x in H

    // Roles of H and Q exchanged; the pairing of the swapped data is zero.
    TripleData swapped() const;

    std::string hName(const ModEl&) const;  // pretty-print helpers
    std::string qName(const ModEl&) const;
};

// ---- total Lie-Rinehart algebra on L = H + Q ----
struct TotalLie {
    std::string name;
    BaseAlgebra A;
    std::size_t n = 0;  // rank of L
    std::vector<std::string> names;
    std::vector<std::vector<ModEl>> bracket;  // full table on basis pairs
    std::vector<DerivationOfA> anchor;

    AEl act(const ModEl& u, const AEl& a) const;
    ModEl br(const ModEl& u, const ModEl& v) const;  // Leibniz-extended
};

TotalLie assemble_total(const TripleData& t);
// Recovers the TripleData (restriction/projection); exact inverse of
// assemble_total for well-formed input.
TripleData split_total(const TotalLie& l, std::size_t n_h);

// ---- checker suites ----
SuiteReport check_almost_pre(const TripleData& t, std::uint64_t seed = 1);
SuiteReport check_pre(const TripleData& t, std::uint64_t seed = 1);
SuiteReport check_triple(const TripleData& t, std::uint64_t seed = 1);
SuiteReport check_lie_rinehart(const TotalLie& l, std::uint64_t seed = 1);

// ---- invariants (fixed points of the H-action) ----
struct Invariants {
    std::vector<AEl> a_h;     // basis of the H-invariant subalgebra of A
    std::vector<ModEl> q_h;   // basis of the H-invariant part of Q
    std::vector<ModEl> l_h;   // basis of the normalizer inside L
    bool extension_ok = false;  // bracket of L closes on l_h
    // delta restricted to the invariant part, as a matrix of H-elements
    std::vector<std::vector<ModEl>> cocycle;
};
Invariants invariants(const TripleData& t);

SuiteReport check_trivial_action_extension(const TripleData& t);

// ---- multi-products built from delta and the connections ----
// p3a  {xi,eta;a}          in A
// p4a  {alpha;xi,eta;a}    in A
// p5a  {alpha;beta;xi,eta;a} in A
// p3q  {xi,eta;theta}      in Q
// p4q  {alpha;xi,eta;kappa} in Q
// p5q  {alpha;beta;xi,eta;gamma} in Q
struct Products {
    const TripleData& t;
    AEl p3a(const ModEl& xi, const ModEl& eta, const AEl& a) const;
    AEl p4a(const ModEl& al, const ModEl& xi, const ModEl& eta,
            const AEl& a) const;
    AEl p5a(const ModEl& al, const ModEl& be, const ModEl& xi,
            const ModEl& eta, const AEl& a) const;
    ModEl p3q(const ModEl& xi, const ModEl& eta, const ModEl& th) const;
    ModEl p4q(const ModEl& al, const ModEl& xi, const ModEl& eta,
              const ModEl& ka) const;
    ModEl p5q(const ModEl& al, const ModEl& be, const ModEl& xi,
              const ModEl& eta, const ModEl& ga) const;
};

SuiteReport check_products(const TripleData& t, std::uint64_t seed = 1);

}  // namespace lrt

#endif  // LRT_TRIPLE_HPP
