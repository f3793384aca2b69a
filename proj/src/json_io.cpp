#include "cohomotopy/json_io.hpp"

#include <limits>
#include <set>
#include <sstream>

namespace cohomotopy {

namespace {

Int int_from_json(const ordered_json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return Int(j.get<long long>());
}

long long int_to_ll(const Int& v, const char* what) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw std::runtime_error(std::string(what) + " does not fit a JSON integer");
    return v.convert_to<long long>();
}

std::vector<Int> int_list_from_json(const ordered_json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e, what));
    return out;
}

const ordered_json& require_key(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

}  // namespace

ordered_json group_to_json(const FinAbGroup& g) {
    ordered_json j;
    j["free_rank"] = g.free_rank();
    j["torsion"] = ordered_json::array();
    for (const Int& d : g.torsion()) j["torsion"].push_back(int_to_ll(d, "invariant factor"));
    return j;
}

FinAbGroup group_from_json(const ordered_json& j) {
    const auto& fr = require_key(j, "free_rank");
    if (!fr.is_number_integer() || fr.get<long long>() < 0)
        throw ParseError("free_rank must be a non-negative integer");
    std::vector<Int> torsion = int_list_from_json(require_key(j, "torsion"), "torsion");
    try {
        return FinAbGroup(torsion, fr.get<std::size_t>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ordered_json element_to_json(const GroupElement& e) {
    const std::size_t t = e.group().torsion_rank();
    ordered_json j;
    j["torsion"] = ordered_json::array();
    j["free"] = ordered_json::array();
    for (std::size_t i = 0; i < t; ++i) j["torsion"].push_back(int_to_ll(e.coords()[i], "coordinate"));
    for (std::size_t i = t; i < e.coords().size(); ++i)
        j["free"].push_back(int_to_ll(e.coords()[i], "coordinate"));
    return j;
}

GroupElement element_from_json(const FinAbGroup& g, const ordered_json& j) {
    std::vector<Int> tors = int_list_from_json(require_key(j, "torsion"), "element torsion part");
    std::vector<Int> free = int_list_from_json(require_key(j, "free"), "element free part");
    if (tors.size() != g.torsion_rank() || free.size() != g.free_rank())
        throw ParseError("element coordinate count does not match the group");
    tors.insert(tors.end(), free.begin(), free.end());
    return GroupElement(g, std::move(tors));
}

ordered_json matrix_to_json(const IntMat& m) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_to_ll(m(i, k), "matrix entry"));
        j.push_back(std::move(row));
    }
    return j;
}

IntMat matrix_from_json(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols) throw ParseError("matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(row.at(k), "matrix entry");
    }
    return m;
}

ordered_json manifold_to_document(const ManifoldData& x) {
    ordered_json doc;
    doc["h1"] = group_to_json(x.h1);
    doc["h2"] = group_to_json(x.h2);
    doc["h3_rank"] = x.h3_rank;
    doc["q"] = matrix_to_json(x.q);
    ordered_json mu = ordered_json::array();
    for (std::size_t g = 0; g < x.mu.size(); ++g)
        for (std::size_t j = 0; j < x.mu[g].size(); ++j) {
            if (x.mu[g][j].is_zero()) continue;
            ordered_json entry;
            entry["h2_gen"] = g;
            entry["h3_gen"] = j;
            entry["value"] = element_to_json(x.mu[g][j]);
            mu.push_back(std::move(entry));
        }
    doc["mu"] = std::move(mu);
    doc["w"] = x.w.bits;
    return doc;
}

ManifoldData manifold_from_document(const ordered_json& doc) {
    if (!doc.is_object()) throw ParseError("manifold document must be a JSON object");
    ManifoldData x;
    x.name = "input";
    x.h1 = group_from_json(require_key(doc, "h1"));
    x.h2 = group_from_json(require_key(doc, "h2"));
    const auto& h3 = require_key(doc, "h3_rank");
    if (!h3.is_number_integer() || h3.get<long long>() < 0)
        throw ParseError("h3_rank must be a non-negative integer");
    x.h3_rank = h3.get<std::size_t>();
    x.q = matrix_from_json(require_key(doc, "q"));

    x.mu.assign(x.h2.num_generators(),
                std::vector<GroupElement>(x.h3_rank, GroupElement::zero(x.h1)));
    const auto& mu = require_key(doc, "mu");
    if (!mu.is_array()) throw ParseError("mu must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& entry : mu) {
        const auto& gj = require_key(entry, "h2_gen");
        const auto& hj = require_key(entry, "h3_gen");
        if (!gj.is_number_integer() || !hj.is_number_integer())
            throw ParseError("mu indices must be integers");
        std::size_t g = gj.get<std::size_t>(), j = hj.get<std::size_t>();
        if (g >= x.h2.num_generators() || j >= x.h3_rank)
            throw ParseError("mu index out of range");
        if (!seen.insert({g, j}).second) throw ParseError("duplicate mu entry");
        x.mu[g][j] = element_from_json(x.h1, require_key(entry, "value"));
    }

    // w is required for even q, ignored (zero-filled) for odd q
    bool even = true;
    for (std::size_t i = 0; i < x.q.rows() && i < x.q.cols(); ++i)
        if (x.q(i, i) % 2 != 0) even = false;
    x.w = Z2Functional::zero(x.h1);
    if (even) {
        const auto& w = require_key(doc, "w");
        if (!w.is_array()) throw ParseError("w must be an array of bits");
        if (w.size() != x.w.bits.size())
            throw ParseError("w must have one bit per even invariant factor of h1");
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w.at(i).is_number_integer()) throw ParseError("w bits must be 0 or 1");
            long long b = w.at(i).get<long long>();
            if (b != 0 && b != 1) throw ParseError("w bits must be 0 or 1");
            x.w.bits[i] = static_cast<int>(b);
        }
    }
    return x;
}

ordered_json report_to_json(const CohomotopyReport& r) {
    ordered_json j;
    j["parity"] = r.parity == Parity::odd ? "odd" : "even";
    j["spin"] = r.spin;
    ordered_json type;
    switch (r.type.kind) {
        case TypeTag::I: type["tag"] = "I"; break;
        case TypeTag::II: type["tag"] = "II"; break;
        case TypeTag::III1: type["tag"] = "III1"; break;
        case TypeTag::III2:
            type["tag"] = "III2";
            type["radius"] = r.type.radius;
            break;
    }
    j["type"] = std::move(type);
    j["pi1"] = group_to_json(r.pi1);
    j["pi3"] = group_to_json(r.pi3);
    j["pi4"] = group_to_json(r.pi4);
    ordered_json pi2 = ordered_json::array();
    for (const auto& row : r.pi2) {
        ordered_json e;
        e["alpha"] = element_to_json(row.alpha);
        e["fiber"] = group_to_json(row.fiber);
        e["twisted"] = row.twisted;
        pi2.push_back(std::move(e));
    }
    j["pi2"] = std::move(pi2);
    j["bound"] = r.bound;
    return j;
}

std::string report_to_text(const ManifoldData& x, const CohomotopyReport& r) {
    std::ostringstream out;
    out << "manifold: " << x.name << "\n";
    out << "parity:   " << (r.parity == Parity::odd ? "odd" : "even") << "\n";
    out << "spin:     " << (r.spin ? "yes" : "no") << "\n";
    out << "type:     " << r.type.to_string() << "\n";
    out << "pi^1 = " << r.pi1.to_string() << "\n";
    out << "pi^3 = " << r.pi3.to_string() << "\n";
    out << "pi^4 = " << r.pi4.to_string() << "\n";
    out << "pi^n = 0 for n >= 5\n";
    out << "pi^2: " << r.pi2.size() << " fiber(s) over classes of self-intersection zero, bound "
        << r.bound << "\n";
    out << "      (each fiber is a torsor: no canonical basepoint except over alpha = 0)\n";
    for (const auto& row : r.pi2) {
        out << "  alpha=" << row.alpha.to_string() << "  fiber = " << row.fiber.to_string();
        if (row.twisted) out << "  [twisted]";
        out << "\n";
    }
    return out.str();
}

}  // namespace cohomotopy
