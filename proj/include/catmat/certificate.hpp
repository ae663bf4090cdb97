#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "catmat/decider.hpp"
#include "catmat/finite_category.hpp"
#include "catmat/hom_matrix.hpp"
#include "catmat/oracle.hpp"
#include "catmat/partition.hpp"
#include "catmat/reduction.hpp"
#include "catmat/verifier.hpp"

namespace catmat {

using json = nlohmann::ordered_json;

json matrix_json(const HomMatrix& m);
json reduction_json(const ReductionMap& map);
json partition_json(const Partition& p);
json reason_json(const Reason& r);
json verdict_json(const Verdict& v);
json conditions_json(const std::vector<ConditionResult>& rows);
json report_json(const VerificationReport& r, const FiniteCategory& c);

/// {"matrix", "reduction", "objects", "homs", "identities", "table"} with
/// labels in their canonical string form.
json write_certificate(const FiniteCategory& c, const HomMatrix& m, const ReductionMap& map);

struct Certificate {
  HomMatrix matrix;
  ReductionMap reduction;
  FiniteCategory category;
};

/// Rebuilds the category from its certificate. Table entries are taken as
/// written, so a wrong composite is left for the verifier to report.
/// Throws SchemaError on missing fields, unknown labels, duplicate labels or
/// duplicate table rows, and ParseError if `text` is not JSON.
Certificate read_certificate(std::string_view text);

}  // namespace catmat
