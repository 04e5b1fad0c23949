#ifndef LRT_MUTATE_HPP
#define LRT_MUTATE_HPP

// Seeded single-structure-constant mutations, used to exercise both
// directions of the equivalence theorems.  A mutation adds +1 to one
// coordinate of one stored structure constant (brackets, pairing, or
// connections) — slots whose perturbation would break the well-formedness
// invariants enforced at construction (anchor matrices) are not touched, so
// every mutant is still a well-formed data set and the checkers decide.

#include <random>
#include <string>
#include <vector>

#include "lrt/triple.hpp"

namespace lrt {

struct MutationSlot {
    // table: 0 bracketH, 1 bracketQ, 2 delta, 3 connHQ, 4 connQH
    int table;
    std::size_t i, j;   // pair indices
    std::size_t comp;   // module component
    std::size_t coeff;  // A-coordinate
    std::string describe(const TripleData& t) const;
};

inline std::string MutationSlot::describe(const TripleData& t) const {
    static const char* kTables[] = {"bracket_H", "bracket_Q", "delta",
                                    "conn_HQ", "conn_QH"};
    return std::string(kTables[table]) + "[" + std::to_string(i) + "," +
           std::to_string(j) + "] component " + std::to_string(comp) +
           " coeff " + std::to_string(coeff);
}

inline std::vector<MutationSlot> mutation_slots(const TripleData& t,
                                                const std::string& target) {
    std::vector<MutationSlot> slots;
    auto want = [&](const char* name) {
        return target == "random" || target == name;
    };
    if (want("bracket_H")) {
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t j = i + 1; j < t.nH; ++j) {
                for (std::size_t c = 0; c < t.nH; ++c) {
                    for (std::size_t a = 0; a < t.A.dim; ++a) {
                        slots.push_back({0, i, j, c, a});
                    }
                }
            }
        }
    }
    if (want("bracket_Q")) {
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = i + 1; j < t.nQ; ++j) {
                for (std::size_t c = 0; c < t.nQ; ++c) {
                    for (std::size_t a = 0; a < t.A.dim; ++a) {
                        slots.push_back({1, i, j, c, a});
                    }
                }
            }
        }
    }
    if (want("delta")) {
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = i + 1; j < t.nQ; ++j) {
                for (std::size_t c = 0; c < t.nH; ++c) {
                    for (std::size_t a = 0; a < t.A.dim; ++a) {
                        slots.push_back({2, i, j, c, a});
                    }
                }
            }
        }
    }
    if (want("conn_HQ")) {
        for (std::size_t i = 0; i < t.nH; ++i) {
            for (std::size_t j = 0; j < t.nQ; ++j) {
                for (std::size_t c = 0; c < t.nQ; ++c) {
                    for (std::size_t a = 0; a < t.A.dim; ++a) {
                        slots.push_back({3, i, j, c, a});
                    }
                }
            }
        }
    }
    if (want("conn_QH")) {
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = 0; j < t.nH; ++j) {
                for (std::size_t c = 0; c < t.nH; ++c) {
                    for (std::size_t a = 0; a < t.A.dim; ++a) {
                        slots.push_back({4, i, j, c, a});
                    }
                }
            }
        }
    }
    return slots;
}

inline TripleData apply_mutation(const TripleData& t, const MutationSlot& s) {
    TripleData m = t;
    m.name = t.name + ".mutant";
    switch (s.table) {
        case 0: m.bracketH[s.i][s.j][s.comp][s.coeff] += 1; break;
        case 1: m.bracketQ[s.i][s.j][s.comp][s.coeff] += 1; break;
        case 2: m.delta[s.i][s.j][s.comp][s.coeff] += 1; break;
        case 3: m.connHQ[s.i][s.j][s.comp][s.coeff] += 1; break;
        case 4: m.connQH[s.i][s.j][s.comp][s.coeff] += 1; break;
        default: break;
    }
    return m;
}

// Deterministic seeded mutant; returns the unchanged input when the instance
// has no mutable slot for the requested target.
inline TripleData mutate_random(const TripleData& t, std::uint64_t seed,
                                const std::string& target = "random",
                                std::string* description = nullptr) {
    const auto slots = mutation_slots(t, target);
    if (slots.empty()) {
        if (description) *description = "no mutable slot";
        return t;
    }
    std::mt19937_64 rng(seed);
    const MutationSlot& s = slots[rng() % slots.size()];
    if (description) *description = s.describe(t);
    return apply_mutation(t, s);
}

}  // namespace lrt

#endif  // LRT_MUTATE_HPP
