#pragma once

#include <json.hpp>

#include "mfk/catalog.hpp"
#include "mfk/parse.hpp"
#include "mfk/search.hpp"
#include "mfk/strength.hpp"

namespace mfk {

using nlohmann::json;
using nlohmann::ordered_json;

// --- writers ------------------------------------------------------------
// All writers emit canonical polynomial strings (terms in the global
// monomial order).  An empty name list means the default z0, z1, ...

ordered_json decomposition_to_json(const StrengthDecomposition& D,
                                   const std::vector<std::string>& names = {});
ordered_json mf_to_json(const MatrixFactorization& mf,
                        const std::vector<std::string>& names = {});
ordered_json catalog_entry_to_json(const CatalogEntry& e);
ordered_json verification_report_to_json(const VerificationReport& r);
ordered_json mcm_rank_to_json(const McmRank& r);
// The analysis report: degree, codimensions, e, the certified strength
// interval, and the 2^{e+1} / 2^e rank thresholds.
ordered_json profile_to_json(const SingularityProfile& p,
                             const std::vector<std::string>& names = {});
ordered_json certificate_to_json(const StrengthCertificate& c,
                                 const std::vector<std::string>& names = {});
ordered_json gap_report_to_json(const GapReport& r,
                                const std::vector<std::string>& names = {});
ordered_json search_result_to_json(const SearchResult& r,
                                   const std::vector<std::string>& names = {});

// Full decomposition-vs-thresholds report for one exhibited decomposition.
ordered_json bgs_report_json(const StrengthDecomposition& D,
                             const std::vector<std::string>& names = {});

// --- readers ------------------------------------------------------------
// Readers accept either the bare document or a catalog entry wrapping one
// (the "decomposition" / "mf" member is unwrapped).

StrengthDecomposition decomposition_from_json(const json& doc);
MatrixFactorization mf_from_json(const json& doc);

// The variable table a document declares: "var_names" when present (size
// must match "num_vars"), else the default names.
VarTable doc_var_table(const json& doc);

} // namespace mfk
