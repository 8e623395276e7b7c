/*
   Copyright 2026 the cubic-kummer authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KUMMER_SERIALIZE_HPP
#define KUMMER_SERIALIZE_HPP

#include <json.hpp>

#include "kummer/census.hpp"

namespace kummer {

using Json = nlohmann::ordered_json;

/// Elements render as coefficient arrays, low-degree-first.
Json to_json(const FieldElement& a);
Json to_json(const Place& P);
Json to_json(const Divisor& d);
Json to_json(const UpPlace& Q);
Json to_json(const UpDivisor& d);
Json to_json(const Classification& cls);
Json to_json(const CriterionVerdict& v);
Json to_json(const RamificationReport& rep);
Json to_json(const MawuReport& rep);
Json to_json(const LevelData& data);
Json census_row_to_json(const CensusRow& row, std::uint64_t q);
Json census_to_json(const FiniteField& field, const std::vector<CensusRow>& rows);

std::string reason_str(NotApplicableReason r);

}  // namespace kummer

#endif
