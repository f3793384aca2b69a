#pragma once

#include "cohomotopy/classify.hpp"

#include <json.hpp>

namespace cohomotopy {

using ordered_json = nlohmann::ordered_json;

/// Malformed document (as opposed to well-formed data that fails the
/// duality checks, which is reported through validate()).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const ordered_json& j);

/// Elements serialize as {"torsion": [...], "free": [...]}.
ordered_json element_to_json(const GroupElement& e);
GroupElement element_from_json(const FinAbGroup& g, const ordered_json& j);

ordered_json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const ordered_json& j);

/// Manifold document: keys h1, h2, h3_rank, q, mu, w.  mu lists only the
/// nonzero pairings; w is required iff q is even and ignored when odd.
ordered_json manifold_to_document(const ManifoldData& x);
ManifoldData manifold_from_document(const ordered_json& doc);

ordered_json report_to_json(const CohomotopyReport& r);
std::string report_to_text(const ManifoldData& x, const CohomotopyReport& r);

}  // namespace cohomotopy
