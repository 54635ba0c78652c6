#pragma once

// Text and JSON renderings of pipeline results. JSON uses insertion-ordered
// objects and integers only, so output is byte-stable across runs.

#include <string>
#include <vector>

#include <json.hpp>

#include "solk/germs.hpp"
#include "solk/ktheory.hpp"
#include "solk/limits.hpp"
#include "solk/model.hpp"
#include "solk/sft.hpp"

namespace solk {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers; larger ones decimal strings.
Json int_to_json(const Int& v);
Json matrix_to_json(const IntMatrix& m);

Json validation_json(const ValidationReport& r);
Json limit_json(const StationaryLimitGroup& g);
Json classes_json(const Presentation& p, const QuotientModel& q, const QuotientSummary& s);
Json ktheory_json(const Presentation& p, const KTheoryReport& r);
Json sft_json(const SftPresentation& s, const SftKTheory& k);

std::string format_matrix(const IntMatrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, int indent = 2);

std::string validation_text(const ValidationReport& r);
std::string limit_text(const StationaryLimitGroup& g);
std::string classes_text(const Presentation& p, const QuotientModel& q, const QuotientSummary& s);
std::string ktheory_text(const Presentation& p, const KTheoryReport& r);
std::string sft_text(const SftPresentation& s, const SftKTheory& k);

// Stable serialization used by the CLI (2-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace solk
