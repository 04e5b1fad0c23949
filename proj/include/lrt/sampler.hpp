#ifndef LRT_SAMPLER_HPP
#define LRT_SAMPLER_HPP

// Deterministic pseudo-random sampling of composite algebra/module elements.
// Everything is seeded explicitly, so sampled checks are reproducible.

#include <random>

#include "lrt/algebra.hpp"

namespace lrt {

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : m_rng(seed) {}

    std::uint64_t raw() { return m_rng(); }

    Rat rat() {
        // small integers: the identities are multilinear, so generic small
        // integer points exercise the same code paths as fractional ones
        // while keeping the exact arithmetic cheap
        const long num = static_cast<long>(m_rng() % 7) - 3;
        m_rng();  // keep the stream layout stable
        return Rat(num);
    }

    AEl ael(const BaseAlgebra& a) {
        AEl v = a.zero();
        for (std::size_t i = 0; i < a.dim; ++i) v[i] = rat();
        return v;
    }

    ModEl mod(std::size_t rank, const BaseAlgebra& a) {
        ModEl m(rank);
        for (std::size_t i = 0; i < rank; ++i) m[i] = ael(a);
        return m;
    }

  private:
    std::mt19937_64 m_rng;
};

}  // namespace lrt

#endif  // LRT_SAMPLER_HPP
