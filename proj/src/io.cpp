#include "lrt/io.hpp"

#include <fstream>
#include <sstream>

namespace lrt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bail(const std::string& where, const std::string& what) {
    throw InstanceParseError(where + ": " + what);
}

Rat read_rat(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long long>());
    } catch (const std::invalid_argument& e) {
        bail(where, e.what());
    }
    bail(where, "expected a rational as a \"p/q\" string");
}

AEl read_ael(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        bail(where, "expected an array of " + std::to_string(dim) +
                        " rationals");
    AEl a(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i)
        a[i] = read_rat(j[i], where + "[" + std::to_string(i) + "]");
    return a;
}

ModEl read_model(const json& j, std::size_t rank, std::size_t dim,
                 const std::string& where) {
    if (!j.is_array() || j.size() != rank)
        bail(where, "expected an array of " + std::to_string(rank) +
                        " coefficient vectors");
    ModEl m;
    m.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        m.push_back(read_ael(j[i], dim, where + "[" + std::to_string(i) +
                                            "]"));
    return m;
}

Matrix read_matrix(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        bail(where, "expected a " + std::to_string(dim) + "x" +
                        std::to_string(dim) + " matrix");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != dim)
            bail(where + "[" + std::to_string(r) + "]",
                 "expected a row of " + std::to_string(dim) + " rationals");
        for (std::size_t c = 0; c < dim; ++c)
            m.at(r, c) = read_rat(row[c], where + "[" + std::to_string(r) +
                                              "][" + std::to_string(c) + "]");
    }
    return m;
}

std::pair<std::size_t, std::size_t> read_key(const std::string& key,
                                             std::size_t ni, std::size_t nj,
                                             bool strict_upper,
                                             const std::string& where) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        bail(where, "key '" + key + "' is not of the form \"i,j\"");
    std::size_t i = 0, j = 0;
    try {
        i = std::stoul(key.substr(0, comma));
        j = std::stoul(key.substr(comma + 1));
    } catch (const std::exception&) {
        bail(where, "key '" + key + "' is not of the form \"i,j\"");
    }
    if (i >= ni || j >= nj)
        bail(where, "key '" + key + "' is out of range");
    if (strict_upper && i >= j)
        bail(where, "key '" + key + "' must have i < j");
    return {i, j};
}

void read_pair_table(const json& parent, const char* field,
                     std::vector<std::vector<ModEl>>& table, std::size_t ni,
                     std::size_t nj, bool strict_upper, std::size_t rank,
                     std::size_t dim) {
    if (!parent.contains(field)) return;
    const json& j = parent.at(field);
    if (!j.is_object()) bail(field, "expected an object of \"i,j\" entries");
    for (const auto& [key, val] : j.items()) {
        const auto [i, jj] =
            read_key(key, ni, nj, strict_upper, std::string(field));
        table[i][jj] = read_model(
            val, rank, dim, std::string(field) + "[\"" + key + "\"]");
    }
}

std::string rat_json(const Rat& r) { return rat_to_string(r); }

ordered_json ael_json(const AEl& a) {
    ordered_json out = ordered_json::array();
    for (const auto& x : a) out.push_back(rat_to_string(x));
    return out;
}

ordered_json model_json(const ModEl& m) {
    ordered_json out = ordered_json::array();
    for (const auto& a : m) out.push_back(ael_json(a));
    return out;
}

ordered_json pair_table_json(const std::vector<std::vector<ModEl>>& table,
                             std::size_t ni, std::size_t nj,
                             bool strict_upper) {
    ordered_json out = ordered_json::object();
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = strict_upper ? i + 1 : 0; j < nj; ++j) {
            if (mod_is_zero(table[i][j])) continue;
            out[std::to_string(i) + "," + std::to_string(j)] =
                model_json(table[i][j]);
        }
    return out;
}

}  // namespace

TripleData instance_from_json(const json& j) {
    if (!j.is_object()) bail("top level", "expected a JSON object");
    BaseAlgebra A = BaseAlgebra::rationals();
    if (j.contains("base_algebra")) {
        const json& ja = j.at("base_algebra");
        if (!ja.is_object()) bail("base_algebra", "expected an object");
        A.dim = ja.value("dim", std::size_t{1});
        if (A.dim == 0) bail("base_algebra.dim", "must be positive");
        A.names.clear();
        if (ja.contains("basis")) {
            for (const auto& n : ja.at("basis"))
                A.names.push_back(n.get<std::string>());
            if (A.names.size() != A.dim)
                bail("base_algebra.basis", "size must equal dim");
        } else {
            for (std::size_t i = 0; i < A.dim; ++i)
                A.names.push_back("e" + std::to_string(i));
        }
        if (!ja.contains("mult"))
            bail("base_algebra", "missing 'mult' table");
        const json& jm = ja.at("mult");
        if (!jm.is_array() || jm.size() != A.dim)
            bail("base_algebra.mult", "expected dim x dim x dim array");
        A.mult.assign(A.dim, std::vector<AEl>(A.dim));
        for (std::size_t r = 0; r < A.dim; ++r) {
            if (!jm[r].is_array() || jm[r].size() != A.dim)
                bail("base_algebra.mult", "expected dim x dim x dim array");
            for (std::size_t c = 0; c < A.dim; ++c)
                A.mult[r][c] = read_ael(
                    jm[r][c], A.dim,
                    "base_algebra.mult[" + std::to_string(r) + "][" +
                        std::to_string(c) + "]");
        }
        if (!ja.contains("unit")) bail("base_algebra", "missing 'unit'");
        A.unit = read_ael(ja.at("unit"), A.dim, "base_algebra.unit");
        std::string why;
        if (!A.is_valid(&why)) bail("base_algebra", why);
    }

    auto read_rank = [&](const char* field, std::size_t* rank,
                         std::vector<std::string>* names,
                         const char* stem) {
        if (!j.contains(field)) bail(field, "missing section");
        const json& js = j.at(field);
        if (!js.is_object() || !js.contains("rank"))
            bail(field, "expected an object with 'rank'");
        *rank = js.at("rank").get<std::size_t>();
        names->clear();
        if (js.contains("basis")) {
            for (const auto& n : js.at("basis"))
                names->push_back(n.get<std::string>());
            if (names->size() != *rank)
                bail(std::string(field) + ".basis",
                     "size must equal rank");
        } else {
            for (std::size_t i = 0; i < *rank; ++i)
                names->push_back(stem + std::to_string(i));
        }
    };

    std::size_t nh = 0, nq = 0;
    std::vector<std::string> names_h, names_q;
    read_rank("H", &nh, &names_h, "x");
    read_rank("Q", &nq, &names_q, "xi");

    TripleData t = TripleData::zero(A, nh, nq, names_h, names_q);
    t.name = j.value("name", std::string("unnamed"));

    auto read_anchors = [&](const char* field,
                            std::vector<DerivationOfA>& anchors,
                            std::size_t rank) {
        if (!j.contains(field)) return;
        const json& ja = j.at(field);
        if (!ja.is_array() || ja.size() != rank)
            bail(field, "expected " + std::to_string(rank) + " matrices");
        for (std::size_t i = 0; i < rank; ++i) {
            anchors[i].mat = read_matrix(
                ja[i], A.dim,
                std::string(field) + "[" + std::to_string(i) + "]");
            std::string why;
            if (!anchors[i].is_derivation(A, &why))
                bail(std::string(field) + "[" + std::to_string(i) + "]",
                     "not a derivation of the base algebra: " + why);
        }
    };
    read_anchors("anchor_H", t.anchorH, nh);
    read_anchors("anchor_Q", t.anchorQ, nq);

    read_pair_table(j, "bracket_H", t.bracketH, nh, nh, true, nh, A.dim);
    read_pair_table(j, "bracket_Q", t.bracketQ, nq, nq, true, nq, A.dim);
    read_pair_table(j, "delta", t.delta, nq, nq, true, nh, A.dim);
    read_pair_table(j, "conn_HQ", t.connHQ, nh, nq, false, nq, A.dim);
    read_pair_table(j, "conn_QH", t.connQH, nq, nh, false, nh, A.dim);

    if (j.contains("orientation"))
        t.orientation = read_ael(j.at("orientation"), A.dim, "orientation");
    return t;
}

ordered_json instance_to_json(const TripleData& t) {
    ordered_json j;
    j["name"] = t.name;
    {
        ordered_json ja;
        ja["dim"] = t.A.dim;
        ja["basis"] = t.A.names;
        ordered_json mult = ordered_json::array();
        for (std::size_t r = 0; r < t.A.dim; ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < t.A.dim; ++c)
                row.push_back(ael_json(t.A.mult[r][c]));
            mult.push_back(row);
        }
        ja["mult"] = mult;
        ja["unit"] = ael_json(t.A.unit);
        j["base_algebra"] = ja;
    }
    j["H"] = {{"rank", t.nH}, {"basis", t.namesH}};
    j["Q"] = {{"rank", t.nQ}, {"basis", t.namesQ}};
    {
        ordered_json ah = ordered_json::array();
        for (const auto& d : t.anchorH) {
            ordered_json m = ordered_json::array();
            for (std::size_t r = 0; r < t.A.dim; ++r) {
                ordered_json row = ordered_json::array();
                for (std::size_t c = 0; c < t.A.dim; ++c)
                    row.push_back(rat_json(d.mat.at(r, c)));
                m.push_back(row);
            }
            ah.push_back(m);
        }
        j["anchor_H"] = ah;
    }
    {
        ordered_json aq = ordered_json::array();
        for (const auto& d : t.anchorQ) {
            ordered_json m = ordered_json::array();
            for (std::size_t r = 0; r < t.A.dim; ++r) {
                ordered_json row = ordered_json::array();
                for (std::size_t c = 0; c < t.A.dim; ++c)
                    row.push_back(rat_json(d.mat.at(r, c)));
                m.push_back(row);
            }
            aq.push_back(m);
        }
        j["anchor_Q"] = aq;
    }
    j["bracket_H"] = pair_table_json(t.bracketH, t.nH, t.nH, true);
    j["bracket_Q"] = pair_table_json(t.bracketQ, t.nQ, t.nQ, true);
    j["delta"] = pair_table_json(t.delta, t.nQ, t.nQ, true);
    j["conn_HQ"] = pair_table_json(t.connHQ, t.nH, t.nQ, false);
    j["conn_QH"] = pair_table_json(t.connQH, t.nQ, t.nH, false);
    if (t.orientation) j["orientation"] = ael_json(*t.orientation);
    return j;
}

TripleData load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InstanceParseError(path + ": " + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const InstanceParseError& e) {
        throw InstanceParseError(path + ": " + e.what());
    }
}

std::string instance_to_string(const TripleData& t) {
    return instance_to_json(t).dump(2) + "\n";
}

}  // namespace lrt
