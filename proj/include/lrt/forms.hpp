#ifndef LRT_FORMS_HPP
#define LRT_FORMS_HPP

// Alternating A-multilinear forms.
//
// Two flavours are used throughout:
//  * the bigraded spaces W^{p,q} = Alt^p(Q, Alt^q(H,A)) attached to a
//    TripleData, with flat coordinate vectors indexed by
//    (increasing Q-tuple, increasing H-tuple, A-basis index);
//  * single-graded spaces Alt^n(L, M) over a free module L with
//    coefficients in a free A-module M, indexed by
//    (increasing L-tuple, M-basis index, A-basis index).
// Evaluation on arbitrary module elements expands multilinearly with the
// alternation sign supplied by sorting index tuples.

#include <vector>

#include "lrt/combin.hpp"
#include "lrt/triple.hpp"

namespace lrt {

// ---- bigraded W spaces -----------------------------------------------------

inline std::size_t w_dim(const TripleData& t, long p, long q) {
    if (p < 0 || q < 0) return 0;
    return binomial(t.nQ, static_cast<std::size_t>(p)) *
           binomial(t.nH, static_cast<std::size_t>(q)) * t.A.dim;
}

inline std::size_t w_index(const TripleData& t, std::size_t p, std::size_t q,
                           std::size_t q_tuple_idx, std::size_t h_tuple_idx,
                           std::size_t a_idx) {
    const std::size_t n_h_tuples = binomial(t.nH, q);
    return (q_tuple_idx * n_h_tuples + h_tuple_idx) * t.A.dim + a_idx;
}

// Evaluates the form with flat coordinates f in W^{p,q} on the given
// arguments (p elements of Q, then q elements of H).
AEl eval_w(const TripleData& t, std::size_t p, std::size_t q, const Vec& f,
           const std::vector<ModEl>& qargs, const std::vector<ModEl>& hargs);

// ---- single-graded Alt^n(L, M) --------------------------------------------

inline std::size_t alt_dim(const BaseAlgebra& a, std::size_t rank_l, long deg,
                           std::size_t rank_m) {
    if (deg < 0) return 0;
    return binomial(rank_l, static_cast<std::size_t>(deg)) * rank_m * a.dim;
}

inline std::size_t alt_index(const BaseAlgebra& a, std::size_t rank_m,
                             std::size_t tuple_idx, std::size_t m_idx,
                             std::size_t a_idx) {
    return (tuple_idx * rank_m + m_idx) * a.dim + a_idx;
}

// Value (in M) of the form f in Alt^deg(L, M) on deg module elements of L.
ModEl eval_alt(const BaseAlgebra& a, std::size_t rank_l, std::size_t deg,
               std::size_t rank_m, const Vec& f,
               const std::vector<ModEl>& args);

// Exterior product of A-valued forms: (f ^ g)(S) with shuffle signs and
// A-multiplication of values.
Vec alt_wedge(const BaseAlgebra& a, std::size_t rank_l, std::size_t deg_f,
              const Vec& f, std::size_t deg_g, const Vec& g);

// Interior product i_u f for u in L (A-linear contraction in the first slot).
Vec alt_contract(const BaseAlgebra& a, std::size_t rank_l, std::size_t deg_f,
                 const Vec& f, const ModEl& u);

}  // namespace lrt

#endif  // LRT_FORMS_HPP
