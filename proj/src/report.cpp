#include "lrt/report.hpp"

#include <json.hpp>

namespace lrt {

void ResidualCheck::add(const Vec& residual, const std::string& where) {
    std::size_t n = 0;
    for (const auto& x : residual) {
        if (x != 0) ++n;
    }
    if (n > 0) {
        if (m_nnz == 0) m_witness = where;
        m_nnz += n;
    }
}

void ResidualCheck::add_scalar(const Rat& residual, const std::string& where) {
    if (residual != 0) {
        if (m_nnz == 0) m_witness = where;
        m_nnz += 1;
    }
}

void ResidualCheck::fail(const std::string& where) {
    if (m_nnz == 0) m_witness = where;
    m_nnz += 1;
}

std::string render_text(const SuiteReport& r) {
    std::string out;
    out += "instance: " + r.instance + "\n";
    out += "suite: " + r.suite + "\n";
    for (const auto& c : r.checks) {
        out += (c.pass ? "PASS " : "FAIL ") + c.id;
        out += " [" + c.ref + "]";
        if (!c.pass) {
            out += " residual_nnz=" + std::to_string(c.residual_nnz);
            out += " witness=" + c.witness;
        }
        out += "\n";
    }
    out += std::string("result: ") + (r.all_pass() ? "pass" : "fail") + "\n";
    return out;
}

std::string render_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["suite"] = r.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["paper_ref"] = c.ref;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["residual_nnz"] = c.residual_nnz;
        jc["witness"] = c.witness;
        j["checks"].push_back(jc);
    }
    j["result"] = r.all_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

}  // namespace lrt
