// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPCON_IO_HPP_
#define PROPCON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "propcon/axioms.hpp"
#include "propcon/candidate_set.hpp"
#include "propcon/constraints.hpp"
#include "propcon/fixtures.hpp"
#include "propcon/greedy_cohesive.hpp"
#include "propcon/model.hpp"
#include "propcon/pav.hpp"
#include "propcon/phragmen.hpp"
#include "propcon/priceability.hpp"

namespace propcon {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Two-space indentation and a trailing newline.
std::string dump_json(const Json& value);

// Throws kParse with the byte offset or JSON path of the problem.
Json parse_json(const std::string& text);

Json election_to_json(const Election& election);
// Unknown top-level keys (for instance "reference") are ignored. For the
// ranking, negative-votes and judgment kinds the candidate list may be
// omitted; the encoded universe is used instead.
Election election_from_json(const Json& doc);

Json constraints_to_json(const ConstraintSpec& spec);
ConstraintSpec constraints_from_json(const Json& doc);

Json set_to_json(const Election& election, const CandidateSet& w);
CandidateSet set_from_json(const Election& election, const Json& doc);
Json voters_to_json(const Election& election, const std::vector<int>& voters);
std::vector<int> voters_from_ids(const Election& election,
                                 const std::vector<std::string>& ids);

Json price_system_to_json(const Election& election, const PriceSystem& ps);
PriceSystem price_system_from_json(const Election& election, const Json& doc);

Json pav_to_json(const Election& election, const PavResult& result);
Json trace_to_json(const Election& election, const PhragmenTrace& trace);
Json partition_to_json(const Election& election,
                       const CohesivePartition& partition);
Json claim_to_json(const Election& election, const GroupClaim& claim);
Json audit_to_json(const Election& election, const AuditReport& report);
Json claim_check_to_json(const Election& election, const ClaimCheck& check);
Json sp_report_to_json(const Election& election, const SpReport& report);
Json witness_to_json(const Election& election, const MatroidWitness& witness);

// The election file, plus "fixture" provenance and a "reference" block with
// the outcome and price system when the fixture has them.
Json fixture_to_json(const FixtureOutput& fixture);

}  // namespace propcon

#endif  // PROPCON_IO_HPP_
