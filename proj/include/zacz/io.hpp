// Serialization boundary: JSON parameter objects, JSON sequence and result
// records, CSV correlation profiles, and permutation parsing (array form and
// cycle notation).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zacz/correlation.hpp"
#include "zacz/golay.hpp"
#include "zacz/qam.hpp"
#include "zacz/search.hpp"

namespace zacz {

using Json = nlohmann::json;

Json to_json(const GolayParams& params);
Json to_json(const OffsetSpec& offsets);
Json to_json(const QamParams& params);
Json to_json(const PhaseSeq& seq);
Json to_json(const ComplexSeq& seq);
Json to_json(const ZaczReport& report);
Json to_json(const SearchResult& result);
Json to_json(const ZoneCheck& check);
Json to_json(const AuditReport& report);

GolayParams golay_params_from_json(const Json& j);
OffsetSpec offsets_from_json(const Json& j);
QamParams qam_params_from_json(const Json& j);
bool looks_like_qam_params(const Json& j);  // carries "q" or "offsets"
bool looks_like_sequence(const Json& j);    // carries "values" or "core"
PhaseSeq phase_seq_from_json(const Json& j);
ComplexSeq complex_seq_from_json(const Json& j);
SearchSpec search_spec_from_json(const Json& j);

// array form "4,2,1,3,5" / "[4,2,1,3,5]" or cycle notation "(143)", "(1 4 3)(2 5)";
// cycles compose right to left; m < 0 infers the size from array input
Permutation parse_permutation(const std::string& text, int m);
std::vector<int> parse_int_list(const std::string& text);

// header "tau,re,im,abs", 17 significant digits, rows tau = lo..hi
void write_profile_csv(std::ostream& os, const CorrProfile& profile, long long lo, long long hi);
Json profile_to_json(const CorrProfile& profile, long long lo, long long hi);

Json load_json_file(const std::string& path);  // "-" reads standard input

}  // namespace zacz
