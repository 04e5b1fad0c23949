#ifndef LRT_QUASI_HPP
#define LRT_QUASI_HPP

// Quasi-structure layer on top of the multicomplex machinery.
//
// Two graded pictures of the same data are used:
//  * the Q-outer spaces 𝒜 = Alt(H,A) and 𝒬 = Alt(H,Q) with their pairing,
//    bracket, and the two displayed operators (the quasi-Lie-Rinehart layer);
//  * the bigraded commutative algebra G^q_p = Alt^q_A(H, Λ^p_A Q) carrying a
//    wedge product, a differential d (H-CCE with values in Λ^p Q), a bracket
//    of bidegree (-1,0), and the pairing-contraction operator Psi of bidegree
//    (-2,-1); together with an orientation form this produces the generator
//    Delta_omega and the quasi-Batalin-Vilkovisky identity suite.
//
// Flat coordinates of G^q_p reuse the W^{p,q} indexing of forms.hpp: the
// index (S, T, a) with S the Q-wedge subset, T the H-subset and a the A-basis
// index denotes the element  e_a · x_T^* ⊗ ξ_S  (H-form factor first).
// BigradedOp is reused verbatim for operators on G.

#include <stdexcept>
#include <vector>

#include "lrt/mc.hpp"

namespace lrt {

// ---- the bigraded algebra G ------------------------------------------------

// Wedge product G^{q1}_{p1} x G^{q2}_{p2} -> G^{q1+q2}_{p1+p2}.
Vec g_mul(const TripleData& t, std::size_t p1, std::size_t q1, const Vec& f,
          std::size_t p2, std::size_t q2, const Vec& g);

// Coordinates of the unit 1 in G^0_0.
Vec g_one(const TripleData& t);

// The bracket of bidegree (-1,0), extended from its values on A, the duals
// x^* in G^1_0 and the elements of Q in G^0_1 by the biderivation rules.
Vec g_bracket(const TripleData& t, std::size_t p1, std::size_t q1,
              const Vec& f, std::size_t p2, std::size_t q2, const Vec& g);

BigradedOp build_g_d(const TripleData& t);   // bidegree (0,+1) in (p,q)
BigradedOp build_psi(const TripleData& t);   // bidegree (-2,-1)

struct GBig {
    TripleData t;
    BigradedOp d;
    BigradedOp psi;
};
GBig build_G(const TripleData& t);

// Deviations of an operator from being a (first/second order) differential
// operator with respect to the product; D is any operator on G.
Vec phi2_dev(const TripleData& t, const BigradedOp& D, std::size_t p1,
             std::size_t q1, const Vec& a, std::size_t p2, std::size_t q2,
             const Vec& b);
Vec phi3_dev(const TripleData& t, const BigradedOp& D, std::size_t p1,
             std::size_t q1, const Vec& a, std::size_t p2, std::size_t q2,
             const Vec& b, std::size_t p3, std::size_t q3, const Vec& c);

// ---- transport between the two outer normal forms --------------------------

// Matrix of the map G^q_p -> Alt^q(H, Alt^{n-p}(Q,A)) (the W-spaces of the
// swapped data, block (q, n-p)), alpha |-> (x... |-> (xi... |->
// w(alpha(x...) ^ xi...))) where w is the top-wedge coordinate; with
// with_orientation the values are additionally multiplied by omega(top).
Matrix phi_block(const TripleData& t, std::size_t p, std::size_t q,
                 bool with_orientation);
Matrix phi_block_inv(const TripleData& t, std::size_t p, std::size_t q,
                     bool with_orientation);

// The mirror image of the pairing operator on the swapped-data spaces,
// mapping block (q, m) to (q-1, m+2).
BigradedOp build_mirror_d2(const TripleData& t);

// Conjugates a G-operator to the swapped-data spaces through phi.
BigradedOp conj_to_swapped(const TripleData& t, const BigradedOp& op,
                           bool with_orientation);

// ---- orientation and the generator ----------------------------------------

struct NotInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// defect(x) = omega(x . top) - x(omega(top)) per H-basis element.
std::vector<AEl> orientation_defects(const TripleData& t);

// The generator Delta_omega of bidegree (-1,0) in (p,q), transported
// blockwise from the first operator of the swapped data.  Throws
// NotInvertibleError when no orientation value is present or the value is
// not a unit of A, NotInvariantError when the H-action does not annihilate
// the orientation.
BigradedOp build_delta_omega(const TripleData& t);

// ---- quasi-Lie-Rinehart layer ---------------------------------------------

struct QuasiLR {
    TripleData t;
    std::vector<Matrix> dA;  // CCE of (A,H) on A, by H-degree
    std::vector<Matrix> dQ;  // CCE of (A,H) on Q, by H-degree
};
QuasiLR build_quasi_lr(const TripleData& t);

// xi(alpha) per the pairing rule, alpha in Alt^q(H,A) flat coordinates.
Vec pairing_q(const TripleData& t, const ModEl& xi, std::size_t q,
              const Vec& alpha);
// <xi,eta; alpha> = contraction of alpha with delta(xi,eta).
Vec op_pair_delta(const TripleData& t, const ModEl& xi, const ModEl& eta,
                  std::size_t q, const Vec& alpha);
// Bracket on Alt(H,Q) (the p=1 column of the G-bracket, in Alt coordinates
// with rank-Q values).
Vec bracket_q(const TripleData& t, std::size_t q1, const Vec& f,
              std::size_t q2, const Vec& g);

BigradedOp quasi_lr_d1(const TripleData& t);
BigradedOp quasi_lr_d2(const TripleData& t);

// Six reports; their conjunction is equivalent to check_multicomplex.
SuiteReport check_quasi_lr(const TripleData& t);

struct CohomologyLR {
    std::vector<std::size_t> dims_a;  // H^q of (Alt(H,A), dA)
    std::vector<std::size_t> dims_q;  // H^q of (Alt(H,Q), dQ)
    SuiteReport report;
};
CohomologyLR cohomology_lr(const TripleData& t);

// ---- exterior-algebra bracket for single-graded Lie-Rinehart data ----------

// [u,v] on Λ_A L for u in Λ^{du}, v in Λ^{dv}; coordinates are flat wedge
// coordinates (subset-major, then A-index), result in degree du+dv-1.
Vec gerstenhaber_bracket(const TotalLie& l, std::size_t deg_u, const Vec& u,
                         std::size_t deg_v, const Vec& v);

// ---- checker suites --------------------------------------------------------

SuiteReport psi_trace_check(const TripleData& t);
SuiteReport check_quasi_gerstenhaber(const TripleData& t,
                                     std::uint64_t seed = 1);
SuiteReport generator_residual(const TripleData& t, const BigradedOp& delta);
SuiteReport check_quasi_bv(const GBig& g, const BigradedOp& delta);
// Convenience entry: builds everything; an orientation failure is reported
// as a failing check instead of propagating the exception.
SuiteReport check_quasi_bv(const TripleData& t);
SuiteReport bv_correspondence_suite(const TripleData& t, const GBig& g,
                                    const BigradedOp& delta);
SuiteReport shuffle_identity_check(const GBig& g, const BigradedOp& delta);
SuiteReport correction_term_check(const TripleData& t);

struct HomologyBV {
    // dims[p][q]: dimension of the d-homology of the p-th column at H-degree
    // q.
    std::vector<std::vector<std::size_t>> dims;
    SuiteReport report;
};
HomologyBV homology_bv(const GBig& g, const BigradedOp& delta);

}  // namespace lrt

#endif  // LRT_QUASI_HPP
