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

#include "kummer/serialize.hpp"

namespace kummer {

Json to_json(const FieldElement& a) {
    Json arr = Json::array();
    for (auto c : a.coeffs()) arr.push_back(c);
    return arr;
}

Json to_json(const Place& P) {
    Json j;
    j["place"] = P.str();
    j["degree"] = P.degree();
    return j;
}

Json to_json(const Divisor& d) {
    Json arr = Json::array();
    for (const auto& [P, coeff] : d) {
        Json j;
        j["place"] = P.str();
        j["coefficient"] = coeff;
        j["degree"] = P.degree();
        arr.push_back(j);
    }
    return arr;
}

Json to_json(const UpPlace& Q) {
    Json j;
    j["below"] = Q.below.str();
    j["e"] = Q.e;
    j["f"] = Q.f;
    j["degree"] = Q.degree();
    if (Q.witness) {
        j["witness"] = to_json(*Q.witness);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const UpDivisor& d) {
    Json arr = Json::array();
    for (const auto& [Q, coeff] : d) {
        Json j = to_json(Q);
        j["coefficient"] = coeff;
        arr.push_back(j);
    }
    return arr;
}

Json to_json(const Classification& cls) {
    Json j;
    j["class"] = cls.tag_str();
    if (cls.alpha) j["alpha"] = to_json(*cls.alpha);
    if (cls.beta) j["beta"] = to_json(*cls.beta);
    if (cls.tag == ClassTag::Invalid) j["reason"] = cls.reason;
    if (cls.tag == ClassTag::Type1 || cls.tag == ClassTag::Type2
        || cls.tag == ClassTag::Type3) {
        j["note"] = "good candidate (necessary condition only)";
    }
    return j;
}

std::string reason_str(NotApplicableReason r) {
    switch (r) {
        case NotApplicableReason::NotGalois: return "not_galois";
        case NotApplicableReason::HReducible: return "h_reducible";
        case NotApplicableReason::SearchExhausted: return "search_exhausted";
    }
    return "search_exhausted";
}

Json to_json(const CriterionVerdict& v) {
    Json j;
    if (v.infinite_genus) {
        j["verdict"] = "infinite_genus";
        j["d"] = v.d;
        j["witness"] = v.witness ? Json(v.witness->str()) : Json(nullptr);
        j["N"] = v.N;
    } else {
        j["verdict"] = "not_applicable";
        j["reason"] = reason_str(v.reason);
        j["detail"] = v.detail;
    }
    return j;
}

Json to_json(const RamificationReport& rep) {
    Json j;
    j["q"] = rep.bf.field->size();
    j["b"] = to_json(rep.bf.b);
    j["c"] = to_json(rep.bf.c);
    j["f"] = rep.bf.f.str();
    j["u"] = rep.bf.u.str();
    j["genus"] = rep.genus;
    j["diff_x"] = to_json(rep.diff_x);
    j["deg_diff_x"] = updivisor_degree(rep.diff_x);
    j["diff_y"] = to_json(rep.yside.diff);
    j["deg_diff_y"] = updivisor_degree(rep.yside.diff);
    j["N"] = rep.N;
    j["galois_over_x"] = rep.galois_over_x;
    j["tame_over_y"] = rep.yside.tame;
    Json suspects = Json::array();
    for (const UpPlace& Q : rep.yside.wild_suspects) suspects.push_back(Q.str());
    j["wild_suspects"] = suspects;
    return j;
}

Json to_json(const MawuReport& rep) {
    Json j;
    j["limit"] = rep.limit;
    j["primes_checked"] = rep.primes_checked;
    j["violations_mod3"] = rep.violations_mod3;
    j["violations_square"] = rep.violations_square;
    j["violations"] = rep.violations_mod3.size() + rep.violations_square.size();
    return j;
}

Json to_json(const LevelData& data) {
    Json j;
    j["level"] = data.level;
    j["extension_degree_over_F0"] = data.extension_degree_over_F0;
    j["ext"] = data.ext;
    j["chain_count"] = data.chain_count;
    RationalValue est = splitting_estimator(data);
    j["estimator"] = {{"num", est.num}, {"den", est.den}};
    return j;
}

Json census_row_to_json(const CensusRow& row, std::uint64_t q) {
    Json j;
    j["q"] = q;
    j["b"] = to_json(row.b);
    j["c"] = to_json(row.c);
    j["class"] = row.cls.tag_str();
    j["genus"] = row.genus;
    j["deg_diff_x"] = row.deg_diff_x;
    j["deg_diff_y"] = row.deg_diff_y;
    j["N"] = row.N;
    j["tame_over_y"] = row.tame_over_y;
    j["criterion"] = to_json(row.verdict);
    j["chains"] = row.chains;
    return j;
}

Json census_to_json(const FiniteField& field, const std::vector<CensusRow>& rows) {
    Json arr = Json::array();
    for (const CensusRow& row : rows) {
        arr.push_back(census_row_to_json(row, field.size()));
    }
    return arr;
}

}  // namespace kummer
