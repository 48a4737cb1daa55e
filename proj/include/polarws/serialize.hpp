#ifndef POLARWS_SERIALIZE_HPP
#define POLARWS_SERIALIZE_HPP

#include "polarws/coset.hpp"
#include "polarws/minwt_br.hpp"
#include "polarws/monomial.hpp"
#include "polarws/oracle.hpp"
#include "polarws/pattern.hpp"
#include "polarws/prefix_table.hpp"
#include "polarws/union_bound.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace polarws {

using Json = nlohmann::json;

// CodeSpec <-> {"m": int, "info": [int...]} with 1-based row indices.
Json to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const Json& j);

// Pattern <-> {"mode","kind","n","i"} for named families,
//             {"mode","kind":"custom","n","indices"} otherwise.
Json to_json(const Pattern& pattern);
Pattern pattern_from_json(const Json& j);

// Spectra: weight -> decimal string; averages carry {"num","exp2","approx"}.
Json to_json(const WeightSpectrum& spectrum);
WeightSpectrum weight_spectrum_from_json(const Json& j);
Json to_json(const AvgSpectrum& spectrum);

Json to_json(const ShortenedMinWeightReport& report);
Json to_json(const QupMinWeight& result);
Json to_json(const WlMinWeight& result);
Json to_json(const McAvgResult& result);
Json to_json(std::span<const UnionBoundPoint> curve);

// Parse a weight -> value map from either the exact-count or the average
// form; used by the union-bound command to accept any spectrum file.
std::map<long, double> double_spectrum_from_json(const Json& j);

// CSV renderings for plot-ready output.
std::string spectrum_csv(const WeightSpectrum& spectrum);
std::string spectrum_csv(const AvgSpectrum& spectrum);
std::string union_bound_csv(std::span<const UnionBoundPoint> curve);

// Punctured view of a prefix table: one row per punctured-codeword
// weight, one column per puncture count.
std::string prefix_table_csv(const PrefixWeightTable& table);

} // namespace polarws

#endif
