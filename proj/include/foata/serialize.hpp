#pragma once

#include <json.hpp>

#include "foata/bijections.hpp"
#include "foata/canonical.hpp"
#include "foata/foata.hpp"
#include "foata/harness.hpp"
#include "foata/stats.hpp"

namespace foata {

nlohmann::json to_json(const Perm& p);
nlohmann::json to_json(const SCanonical& p);
nlohmann::json to_json(const ACanonical& p);
nlohmann::json to_json(const SStatRecord& r);
nlohmann::json to_json(const AStatRecord& r);
nlohmann::json to_json(const QStatRecord& r);
nlohmann::json to_json(const FoataTrace& t);
nlohmann::json to_json(const PsiTrace& t);
nlohmann::json to_json(const DistributionPoly& p);
nlohmann::json to_json(const VerifyReport& r);

/// Tableau row like "6 5 3 | 1 |" (cuts after) or "| 3 6 | 2" (cuts
/// before), matching the worked layouts.
std::string trace_row_text(const TraceRow& row, bool cuts_before);

}  // namespace foata
