#pragma once

// JSON and plain-text renderings shared by the CLI and the golden-file tests.
// Field layouts are documented in docs/json_schemas.md.

#include "ulrich/classifier.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/family_generator.hpp"
#include "ulrich/higher_rank.hpp"
#include "ulrich/ulrich_verifier.hpp"

#include <json.hpp>

#include <ostream>
#include <vector>

namespace ulrich {

/// A JSON number when the value fits in 64 bits, otherwise its decimal string.
nlohmann::ordered_json json_integer(const Integer& v);

nlohmann::ordered_json to_json(const CohomologyReport& r);
nlohmann::ordered_json to_json(const UlrichVerdict& v);
nlohmann::ordered_json to_json(const FamilyRecord& r);
nlohmann::ordered_json to_json(const ClassificationReport& r);
nlohmann::ordered_json to_json(const SeedPair& s);
nlohmann::ordered_json to_json(const RankProfile& p);

void print_table(std::ostream& os, const UlrichVerdict& v);
void print_table(std::ostream& os, const std::vector<FamilyRecord>& records);
void print_table(std::ostream& os, const ClassificationReport& r);
void print_table(std::ostream& os, const SeedPair& s, const std::vector<RankProfile>& rows);

}  // namespace ulrich
