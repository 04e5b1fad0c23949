#include "lrt/catalog.hpp"

#include <stdexcept>

namespace lrt {

namespace {

TripleData make_abelian(std::size_t n) {
    if (n < 2) throw std::invalid_argument("abelian(n) needs n >= 2");
    std::vector<std::string> names_h = {"x1"};
    std::vector<std::string> names_q;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        names_q.push_back("q" + std::to_string(i + 1));
    }
    TripleData t = TripleData::zero(BaseAlgebra::rationals(), 1, n - 1,
                                    names_h, names_q);
    t.name = "abelian(" + std::to_string(n) + ")";
    t.orientation = t.A.one();
    return t;
}

TripleData make_so3() {
    TripleData t = TripleData::zero(BaseAlgebra::rationals(), 1, 2, {"e1"},
                                    {"e2", "e3"});
    t.name = "so3";
    // delta(e2,e3) = e1; e1.e2 = e3; e1.e3 = -e2
    t.delta[0][1] = t.hBasis(0);
    t.connHQ[0][0] = t.qBasis(1);
    t.connHQ[0][1] = mod_scale(Rat(-1), t.qBasis(0));
    t.orientation = t.A.one();
    return t;
}

TripleData make_heis() {
    TripleData t = TripleData::zero(BaseAlgebra::rationals(), 1, 2, {"Z"},
                                    {"X", "Y"});
    t.name = "heis";
    t.delta[0][1] = t.hBasis(0);  // delta(X,Y) = Z
    t.orientation = t.A.one();
    return t;
}

TripleData make_heis_deltazero() {
    TripleData t = make_heis();
    t.name = "heis-deltazero";
    t.delta[0][1] = t.hZero();
    return t;
}

TripleData make_sl2_borel() {
    TripleData t = TripleData::zero(BaseAlgebra::rationals(), 2, 1,
                                    {"h", "e"}, {"f"});
    t.name = "sl2-borel";
    // [h,e]_H = 2e; h.f = -2f; e.f = 0; f.e = -h; f.h = 0; delta = 0
    t.bracketH[0][1] = mod_scale(Rat(2), t.hBasis(1));
    t.connHQ[0][0] = mod_scale(Rat(-2), t.qBasis(0));
    t.connQH[0][1] = mod_scale(Rat(-1), t.hBasis(0));
    t.orientation = t.A.one();  // omega(f) = 1, not invariant
    return t;
}

TripleData make_sl2_ef() {
    TripleData t = TripleData::zero(BaseAlgebra::rationals(), 1, 2, {"e"},
                                    {"h", "f"});
    t.name = "sl2-ef";
    // [h,f]_Q = -2f; h.e = 2e; f.e = 0; e.h = 0; e.f = h; delta = 0
    t.bracketQ[0][1] = mod_scale(Rat(-2), t.qBasis(1));
    t.connQH[0][0] = mod_scale(Rat(2), t.hBasis(0));
    t.connHQ[0][1] = t.qBasis(0);
    t.orientation = t.A.one();  // omega(h^f) = 1, invariant
    return t;
}

TripleData make_dual_numbers() {
    // A = Q[eps]/(eps^2)
    BaseAlgebra a;
    a.dim = 2;
    a.names = {"1", "eps"};
    a.unit = AEl{Rat(1), Rat(0)};
    const AEl one = a.unit;
    const AEl eps = AEl{Rat(0), Rat(1)};
    const AEl zero = AEl{Rat(0), Rat(0)};
    a.mult = {{one, eps}, {eps, zero}};
    TripleData t = TripleData::zero(a, 1, 1, {"x"}, {"xi"});
    t.name = "dual-numbers";
    // both anchors are eps d/d eps
    Matrix d(2, 2);
    d.at(1, 1) = 1;
    t.anchorH[0] = DerivationOfA{d};
    t.anchorQ[0] = DerivationOfA{d};
    t.orientation = a.one();  // omega(xi) = 1
    return t;
}

}  // namespace

TripleData make_heis3() {
    TripleData t = TripleData::zero(BaseAlgebra::rationals(), 1, 3, {"Z"},
                                    {"X", "Y", "W"});
    t.name = "heis3";
    t.delta[0][1] = t.hBasis(0);  // delta(X,Y) = Z
    t.orientation = t.A.one();
    return t;
}

TripleData catalog_get(const std::string& name) {
    if (name.rfind("abelian(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(8, name.size() - 9);
        std::size_t n = 0;
        try {
            n = static_cast<std::size_t>(std::stoul(inner));
        } catch (...) {
            throw std::invalid_argument("bad abelian(n) instance: " + name);
        }
        return make_abelian(n);
    }
    if (name == "so3") return make_so3();
    if (name == "heis") return make_heis();
    if (name == "heis-deltazero") return make_heis_deltazero();
    if (name == "sl2-borel") return make_sl2_borel();
    if (name == "sl2-ef") return make_sl2_ef();
    if (name == "dual-numbers") return make_dual_numbers();
    throw std::invalid_argument("unknown catalog instance: " + name);
}

std::vector<std::string> catalog_names() {
    return {"abelian(3)", "so3",          "heis",         "sl2-borel",
            "sl2-ef",     "dual-numbers", "heis-deltazero"};
}

std::vector<std::string> catalog_valid_names() {
    return {"abelian(3)", "so3",    "heis",
            "sl2-borel",  "sl2-ef", "dual-numbers"};
}

}  // namespace lrt
