#include "cohomotopy/manifold.hpp"

#include <charconv>

namespace cohomotopy {

namespace {

std::optional<Int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    return Int(s);
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"s4", "cp2", "cp2bar", "s2xs2", "s2xt2", "t4", "example3", "e_n_k", "lens:p,q"};
}

std::optional<ManifoldData> catalog_get(const std::string& name) {
    if (name == "s4") {
        ManifoldData x = simply_connected(IntMat(0, 0));
        x.name = "s4";
        return x;
    }
    if (name == "cp2") {
        ManifoldData x = simply_connected(IntMat{{1}});
        x.name = "cp2";
        return x;
    }
    if (name == "cp2bar") {
        ManifoldData x = simply_connected(IntMat{{-1}});
        x.name = "cp2bar";
        return x;
    }
    if (name == "s2xs2") {
        ManifoldData x = simply_connected(IntMat{{0, 1}, {1, 0}});
        x.name = "s2xs2";
        return x;
    }
    if (name == "s2xt2") {
        ManifoldData x = product_with_circle(s2xs1_y());
        x.name = "s2xt2";
        return x;
    }
    if (name == "t4") {
        ManifoldData x = product_with_circle(three_torus_y());
        x.name = "t4";
        return x;
    }
    if (name == "example3") return surgered_example();

    if (name.rfind("e_", 0) == 0) {
        auto sep = name.find('_', 2);
        if (sep == std::string::npos) return std::nullopt;
        auto n = parse_int(name.substr(2, sep - 2));
        auto k = parse_int(name.substr(sep + 1));
        if (!n || !k || (*k != 0 && *k != 1)) return std::nullopt;
        return e_nk(*n, static_cast<int>(*k));
    }
    if (name.rfind("lens:", 0) == 0) {
        auto body = name.substr(5);
        auto comma = body.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto p = parse_int(body.substr(0, comma));
        auto q = parse_int(body.substr(comma + 1));
        if (!p || !q) return std::nullopt;
        ManifoldData x = product_with_circle(lens_space_y(*p, *q));
        x.name = name;
        return x;
    }
    return std::nullopt;
}

}  // namespace cohomotopy
