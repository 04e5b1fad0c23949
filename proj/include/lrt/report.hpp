#ifndef LRT_REPORT_HPP
#define LRT_REPORT_HPP

// Check reporting: every identity checker produces a CheckResult holding the
// number of nonzero residual entries and the first failing witness tuple.
// pass == true iff the residual tensor is identically zero.

#include <cstddef>
#include <string>
#include <vector>

#include "lrt/linalg.hpp"

namespace lrt {

struct CheckResult {
    std::string id;       // stable identity key, e.g. "triple.compat.4"
    std::string ref;      // symbolic reference label (serialized as paper_ref)
    bool pass = true;
    std::size_t residual_nnz = 0;
    std::string witness;  // first failing tuple, empty when pass
};

struct SuiteReport {
    std::string instance;
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks) {
            if (c.id == id) return &c;
        }
        return nullptr;
    }
};

// Accumulates residual entries for one identity across all tuples checked.
class ResidualCheck {
  public:
    ResidualCheck(std::string id, std::string ref)
        : m_id(std::move(id)), m_ref(std::move(ref)) {}

    void add(const Vec& residual, const std::string& where);
    void add_scalar(const Rat& residual, const std::string& where);
    void fail(const std::string& where);  // non-numeric structural failure

    bool pass() const { return m_nnz == 0; }
    CheckResult result() const {
        return CheckResult{m_id, m_ref, pass(), m_nnz, m_witness};
    }

  private:
    std::string m_id;
    std::string m_ref;
    std::size_t m_nnz = 0;
    std::string m_witness;
};

std::string render_text(const SuiteReport& r);
std::string render_json(const SuiteReport& r);

}  // namespace lrt

#endif  // LRT_REPORT_HPP
