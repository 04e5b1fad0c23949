#ifndef LRT_SPECTRAL_HPP
#define LRT_SPECTRAL_HPP

// Spectral sequence of a filtered finite-dimensional cochain complex over
// the rationals, by the explicit subspace construction
//
//   Z_r(l,m) = { v in F_l C^m : D v in F_{l+r} C^{m+1} },
//   E_r(l,m) = Z_r(l,m) / ( Z_{r-1}(l+1,m) + D Z_{r-1}(l-r+1,m-1) ),
//
// with the page differential induced by D.  The filtration is stored
// descending in the level l (F_0 = C, F_l contains F_{l+1}); both graded
// instances below fit this convention after an affine relabeling of the
// level, recorded in the display fields p_sign/p_base/q_base so reported
// bidegrees match each instance's natural coordinates.
//
// Instantiations: the Q-degree filtration of the triple multicomplex, and
// the column filtration of the totalized quasi-Batalin-Vilkovisky operator.

#include <stdexcept>
#include <string>
#include <vector>

#include "lrt/quasi.hpp"

namespace lrt {

struct FiltrationNotPreserved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FilteredComplex {
    std::string name;
    // dim C^m for m = 0..length-1.
    std::vector<std::size_t> dims;
    // d[m] : C^m -> C^{m+1}; the last entry maps to the zero space.
    std::vector<Matrix> d;
    // filt[l][m], l = 0..levels-1: descending in l, filt[0][m] the full
    // space.  Levels below 0 mean the full space, at or beyond `levels`
    // the zero space.
    std::vector<std::vector<Subspace>> filt;
    // display coordinates: p = p_base + p_sign*l, q = (m - l) + q_base.
    int p_sign = 1;
    long p_base = 0;
    long q_base = 0;

    std::size_t length() const { return dims.size(); }
    std::size_t levels() const { return filt.size(); }
    Subspace filt_at(long l, long m) const;
};

struct SpectralPage {
    std::size_t r = 0;
    std::size_t levels = 0, length = 0;
    int p_sign = 1;
    long p_base = 0, q_base = 0;
    // dims[l][m] and representative data per cell; cells[l][m].reps are
    // vectors in the flat coordinates of C^m.
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<Subquotient>> cells;
    // d[l][m]: matrix of the page differential, cell (l,m) -> (l+r, m+1).
    std::vector<std::vector<Matrix>> d;

    // dimension at display bidegree (p,q); zero outside the grid.
    std::size_t dim_pq(long p, long q) const;
    // matrix of the page differential out of display bidegree (p,q).
    Matrix d_pq(long p, long q) const;
    // total dimension per internal degree m.
    std::vector<std::size_t> totals() const;
};

// Pages r = 0 .. r_max.  Verifies the filtration invariants; throws
// FiltrationNotPreserved when D does not preserve the filtration and
// std::invalid_argument on a malformed complex (shape mismatch, non-nested
// filtration, or D*D != 0).
std::vector<SpectralPage> pages(const FilteredComplex& fc, std::size_t r_max);

// Dimensions of H^m(C, D), m = 0..length-1.
std::vector<std::size_t> cohomology_of(const FilteredComplex& fc);

// Master property suite: every page differential squares to zero, page
// dimensions collapse monotonically, each page is the homology of the
// previous one, and the final page's totals equal the cohomology of (C,D).
SuiteReport convergence_check(const FilteredComplex& fc,
                              const std::vector<SpectralPage>& pg);

// The multicomplex of a triple, totalized, filtered by Q-degree.
FilteredComplex triple_ss(const TripleData& t);

// The totalized quasi-Batalin-Vilkovisky operator d + delta + psi on the
// bigraded algebra G, with the ascending column filtration; the internal
// degree is m = (H-degree) - (Q-wedge degree) + rank Q.
FilteredComplex bv_ss(const GBig& g, const BigradedOp& delta);

}  // namespace lrt

#endif  // LRT_SPECTRAL_HPP
