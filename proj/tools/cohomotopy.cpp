#include "cohomotopy/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cohomotopy;

// Exit codes: 0 ok, 1 internal inconsistency, 2 parse error,
// 3 validation failure, 4 self-intersection nonzero, 5 unknown catalog name.
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSelfIntersection = 4;
constexpr int kExitUnknownCatalog = 5;

struct CliFailure {
    int code;
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw CliFailure{kExitParse, "cannot open input file: " + path};
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ordered_json parse_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CliFailure{kExitParse, "input is not valid JSON"};
    return j;
}

// "catalog:NAME", "-" for stdin, or a file path
ManifoldData load_manifold(const std::string& input, bool permissive) {
    ManifoldData x;
    if (input.rfind("catalog:", 0) == 0) {
        auto m = catalog_get(input.substr(8));
        if (!m) throw CliFailure{kExitUnknownCatalog, "unknown catalog name: " + input.substr(8)};
        x = *m;
    } else {
        try {
            x = manifold_from_document(parse_json(read_input(input)));
        } catch (const ParseError& e) {
            throw CliFailure{kExitParse, std::string("parse error: ") + e.what()};
        }
    }
    auto violations = validate(x);
    std::vector<std::string> hard;
    for (const auto& v : violations) {
        if (v.duality && permissive)
            std::cerr << "warning: " << v.message << "\n";
        else
            hard.push_back(v.message);
    }
    if (!hard.empty()) {
        std::ostringstream msg;
        msg << "validation failed:";
        for (const auto& m : hard) msg << "\n  " << m;
        throw CliFailure{kExitValidation, msg.str()};
    }
    return x;
}

int default_bound() {
    const char* env = std::getenv("COHOMOTOPY_DEFAULT_BOUND");
    if (!env) return 5;
    try {
        int b = std::stoi(env);
        if (b >= 1) return b;
    } catch (...) {
    }
    throw CliFailure{kExitParse, "COHOMOTOPY_DEFAULT_BOUND must be a positive integer"};
}

GroupElement parse_alpha(const ManifoldData& x, const std::string& text) {
    std::vector<Int> coords;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        try {
            coords.push_back(Int(cur));
        } catch (...) {
            throw CliFailure{kExitParse, "--alpha: bad coordinate \"" + cur + "\""};
        }
    }
    if (coords.size() != x.h2.num_generators()) {
        std::ostringstream msg;
        msg << "--alpha: expected " << x.h2.num_generators() << " coordinates (torsion first), got "
            << coords.size();
        throw CliFailure{kExitParse, msg.str()};
    }
    return GroupElement(x.h2, coords);
}

int cmd_report(const std::string& input, int bound, int radius, const std::string& format,
               bool permissive) {
    ManifoldData x = load_manifold(input, permissive);
    CohomotopyReport r = cohomotopy_report(x, bound, radius);
    if (format == "json")
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        std::cout << report_to_text(x, r);
    return 0;
}

int cmd_fiber(const std::string& input, const std::string& alpha_text, const std::string& format,
              bool permissive) {
    ManifoldData x = load_manifold(input, permissive);
    GroupElement alpha = parse_alpha(x, alpha_text);
    Int self = self_intersection(x, alpha);
    if (self != 0) {
        std::ostringstream msg;
        msg << "class " << alpha.to_string() << " has self-intersection " << self
            << "; fibers only exist over classes of self-intersection zero";
        throw CliFailure{kExitSelfIntersection, msg.str()};
    }
    FinAbGroup fiber = fiber_group(x, alpha);
    bool twisted = is_twisted_2class(x, alpha);
    if (format == "json") {
        ordered_json j;
        j["alpha"] = element_to_json(alpha);
        j["fiber"] = group_to_json(fiber);
        j["twisted"] = twisted;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fiber = " << fiber.to_string() << (twisted ? "  [twisted]" : "") << "\n";
    }
    return 0;
}

int cmd_snf(const std::string& input, const std::string& format) {
    IntMat m;
    try {
        m = matrix_from_json(parse_json(read_input(input)));
    } catch (const ParseError& e) {
        throw CliFailure{kExitParse, std::string("parse error: ") + e.what()};
    }
    SmithResult r = smith_normal_form(m);
    if (r.U * m * r.V != r.D)
        throw CliFailure{kExitInternal, "internal inconsistency: U*M*V != D"};
    if (format == "json") {
        ordered_json j;
        j["U"] = matrix_to_json(r.U);
        j["D"] = matrix_to_json(r.D);
        j["V"] = matrix_to_json(r.V);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "U = " << r.U << "\nD = " << r.D << "\nV = " << r.V << "\n";
    }
    return 0;
}

int cmd_ext_check(long long max_order) {
    if (max_order < 2 || max_order > 256)
        throw CliFailure{kExitParse, "--max-order must lie in [2, 256]"};
    try {
        std::size_t cases = extension_oracle_sweep(max_order);
        std::cout << "extension check: " << cases << " (group, functional) pairs up to order "
                  << max_order << ", all agree\n";
    } catch (const std::runtime_error& e) {
        throw CliFailure{kExitInternal, std::string("oracle disagreement: ") + e.what()};
    }
    return 0;
}

int cmd_catalog(bool list, const std::string& name) {
    if (list) {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
        return 0;
    }
    auto m = catalog_get(name);
    if (!m) throw CliFailure{kExitUnknownCatalog, "unknown catalog name: " + name};
    std::cout << manifold_to_document(*m).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomotopy sets of closed oriented 4-manifolds"};
    app.require_subcommand(1);

    std::string input, format = "text", alpha_text, catalog_name;
    int bound = 0, radius = 5;
    long long max_order = 64;
    bool permissive = false;

    auto* report = app.add_subcommand("report", "full cohomotopy report for a manifold");
    report->add_option("input", input, "manifold document path, '-' for stdin, or catalog:NAME")
        ->required();
    report->add_option("--bound", bound, "free-coordinate box for the pi^2 enumeration")
        ->check(CLI::PositiveNumber);
    report->add_option("--radius", radius, "search radius for the III1/III2 decision")
        ->check(CLI::PositiveNumber);
    report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    report->add_flag("--permissive", permissive, "downgrade duality violations to warnings");

    auto* fiber = app.add_subcommand("fiber", "fiber group over one class of self-intersection zero");
    fiber->add_option("input", input, "manifold document path, '-' for stdin, or catalog:NAME")
        ->required();
    fiber->add_option("--alpha", alpha_text, "comma-separated coordinates, torsion generators first")
        ->required();
    fiber->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    fiber->add_flag("--permissive", permissive, "downgrade duality violations to warnings");

    auto* snf = app.add_subcommand("snf", "Smith Normal Form of an integer matrix");
    snf->add_option("input", input, "JSON matrix (array of rows), path or '-'")->required();
    snf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ext = app.add_subcommand("ext-check", "cross-validate the extension recipe against the oracle");
    ext->add_option("--max-order", max_order, "largest 2-group order to sweep (<= 256)");

    auto* catalog = app.add_subcommand("catalog", "list or emit the built-in manifolds");
    auto* cat_list = catalog->add_subcommand("list", "list catalog names");
    auto* cat_show = catalog->add_subcommand("show", "emit a manifold document");
    cat_show->add_option("name", catalog_name, "catalog name")->required();
    catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*report) {
            if (bound == 0) bound = default_bound();
            return cmd_report(input, bound, radius, format, permissive);
        }
        if (*fiber) return cmd_fiber(input, alpha_text, format, permissive);
        if (*snf) return cmd_snf(input, format);
        if (*ext) return cmd_ext_check(max_order);
        if (*catalog) return cmd_catalog(cat_list->parsed(), cat_show->parsed() ? catalog_name : "");
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
