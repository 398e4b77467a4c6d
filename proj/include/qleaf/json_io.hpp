#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qleaf/mckay.hpp"
#include "qleaf/repcheck.hpp"
#include "qleaf/roots.hpp"
#include "qleaf/strata.hpp"

namespace qleaf {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Reads and parses a JSON file; parse failures become input_error with
/// file, line and column context.
json load_json_file(const std::string& path);

/// {"vertices": ["inf","0","1"], "arrows": [["inf","0"],["0","1"]]}
Quiver quiver_from_json(const json& j);
json quiver_to_json(const Quiver& q);

/// Arrays aligned with the owning quiver's vertex order.
DimVector dim_vector_from_json(const json& j, Eigen::Index expected);
json dim_vector_to_json(const DimVector& v);
Parameter parameter_from_json(const json& j, Eigen::Index expected);
json parameter_to_json(const Parameter& lam);

/// Comma-separated forms used on the command line. The parameter splitter
/// respects brackets, so "[0,1]@3,-1" is two entries.
DimVector dim_vector_from_csv(const std::string& text, Eigen::Index expected);
Parameter parameter_from_csv(const std::string& text, Eigen::Index expected);

/// {"quiver": {...}, "alpha": [...], "matrices": {"0": [["p/q", ...], ...]}}
/// where matrix keys index the arrows of the doubled quiver; omitted arrows
/// mean zero matrices. Entries are rational strings or integers.
Representation representation_from_json(const json& j);

json rat_matrix_to_json(const RatMatrix& m);

// Report builders. Each returns the full deterministic report object.
json roots_report(const Quiver& q, const DimVector& bound,
                  const std::optional<Parameter>& lam, json inputs);
json sigma_report(const Quiver& q, const Parameter& lam,
                  const DimVector& bound, json inputs);
json decompose_report(const Quiver& q, const Parameter& lam,
                      const DimVector& alpha, const DimVector& bound,
                      json inputs);
json smooth_report(const Quiver& q, const Parameter& lam,
                   const DimVector& alpha, const DimVector& bound,
                   json inputs);
json leaves_report(const Quiver& q, const Parameter& lam,
                   const DimVector& alpha, const DimVector& bound,
                   json inputs);
json mckay_info_report(const GammaData& g, json inputs);
json check_rep_report(const Representation& r, const Parameter& lam,
                      json inputs);

}  // namespace qleaf
