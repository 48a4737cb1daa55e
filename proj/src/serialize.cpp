#include "polarws/serialize.hpp"

#include <sstream>

namespace polarws {

namespace {

long parse_weight_key(const std::string& key) {
    std::size_t pos = 0;
    const long w = std::stol(key, &pos);
    if (pos != key.size() || w < 0) throw validation_error("malformed weight key: " + key);
    return w;
}

BigInt parse_big(const std::string& text) {
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw validation_error("malformed count: " + text);
    }
}

} // namespace

Json to_json(const CodeSpec& spec) {
    return Json{{"m", spec.m()}, {"info", spec.info_rows()}};
}

CodeSpec code_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("info"))
        throw validation_error("code spec JSON needs fields \"m\" and \"info\"");
    return CodeSpec(j.at("m").get<int>(), j.at("info").get<std::vector<int>>());
}

Json to_json(const Pattern& pattern) {
    Json j{{"mode", to_string(pattern.mode())},
           {"kind", to_string(pattern.kind())},
           {"n", pattern.n()}};
    if (pattern.kind() == PatternKind::custom)
        j["indices"] = pattern.indices();
    else
        j["i"] = pattern.size();
    return j;
}

Pattern pattern_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("n"))
        throw validation_error("pattern JSON needs fields \"mode\" and \"n\"");
    const std::string mode_s = j.at("mode").get<std::string>();
    RateMatchMode mode;
    if (mode_s == "puncture")
        mode = RateMatchMode::puncture;
    else if (mode_s == "shorten")
        mode = RateMatchMode::shorten;
    else
        throw validation_error("unknown pattern mode: " + mode_s);

    const int n = j.at("n").get<int>();
    const std::string kind_s = j.value("kind", std::string("custom"));
    if (kind_s == "custom" || j.contains("indices"))
        return custom_pattern(n, mode, j.value("indices", std::vector<int>{}));

    int m = 0;
    while ((1 << m) < n) ++m;
    if ((1 << m) != n) throw validation_error("pattern length must be a power of two");
    if (!j.contains("i"))
        throw validation_error("family pattern JSON needs the field \"i\"");
    const int i = j.at("i").get<int>();
    PatternKind kind;
    if (kind_s == "qup")
        kind = PatternKind::qup;
    else if (kind_s == "wl")
        kind = PatternKind::wl;
    else if (kind_s == "br")
        kind = PatternKind::br;
    else
        throw validation_error("unknown pattern kind: " + kind_s);
    return make_pattern(kind, m, i, mode);
}

Json to_json(const WeightSpectrum& spectrum) {
    Json j = Json::object();
    for (const auto& [w, c] : spectrum.entries()) j[std::to_string(w)] = c.str();
    return j;
}

WeightSpectrum weight_spectrum_from_json(const Json& j) {
    if (!j.is_object()) throw validation_error("spectrum JSON must be an object");
    WeightSpectrum out;
    for (const auto& [key, value] : j.items())
        out.set(parse_weight_key(key), parse_big(value.get<std::string>()));
    return out;
}

Json to_json(const AvgSpectrum& spectrum) {
    Json j = Json::object();
    for (const auto& [w, v] : spectrum.entries)
        j[std::to_string(w)] =
            Json{{"num", v.num.str()}, {"exp2", v.exp2}, {"approx", v.to_double()}};
    return j;
}

Json to_json(const ShortenedMinWeightReport& report) {
    Json j;
    if (report.empty_code) {
        j["d_min"] = nullptr;
        j["empty_code"] = true;
    } else if (report.attained) {
        j["d_min"] = report.min_weight;
    } else {
        j["d_min"] = nullptr;
        j["d_min_exceeds"] = report.min_weight;
    }
    j["count"] = report.total.str();
    Json per = Json::object();
    for (const auto& [f, c] : report.per_monomial) per[f.to_string()] = c.str();
    j["per_monomial"] = per;
    if (report.frozen_info > 0) j["frozen_info"] = report.frozen_info;
    return j;
}

Json to_json(const QupMinWeight& result) {
    Json j{{"i", result.puncture_count}};
    if (result.empty_code) {
        j["d_min"] = nullptr;
        j["empty_code"] = true;
        j["count"] = "0";
        return j;
    }
    j["d_min"] = result.min_weight;
    j["count"] = result.count.str();
    j["count_exact"] = result.count_exact;
    Json lb = Json::object();
    for (const auto& [w, c] : result.lower_bounds) lb[std::to_string(w)] = c.str();
    j["lower_bounds"] = lb;
    return j;
}

Json to_json(const WlMinWeight& result) {
    Json j{{"i", result.shorten_count}};
    if (result.empty_code) {
        j["d_min"] = nullptr;
        j["empty_code"] = true;
        j["count"] = "0";
        return j;
    }
    if (result.attained) {
        j["d_min"] = result.min_weight;
    } else {
        j["d_min"] = nullptr;
        j["d_min_exceeds"] = result.min_weight;
    }
    j["count"] = result.count.str();
    if (result.frozen_info > 0) j["frozen_info"] = result.frozen_info;
    return j;
}

Json to_json(const McAvgResult& result) {
    Json mean = Json::object(), se = Json::object();
    for (const auto& [w, v] : result.mean) mean[std::to_string(w)] = v;
    for (const auto& [w, v] : result.std_error) se[std::to_string(w)] = v;
    return Json{{"samples", result.samples}, {"seed", result.seed}, {"mean", mean},
                {"std_error", se}};
}

Json to_json(std::span<const UnionBoundPoint> curve) {
    Json points = Json::array();
    for (const auto& p : curve) points.push_back(Json{{"sigma", p.sigma}, {"bound", p.value}});
    return points;
}

std::map<long, double> double_spectrum_from_json(const Json& root) {
    const Json* j = &root;
    // Accept the wrapped outputs of the other commands as well.
    if (j->is_object() && j->contains("result")) j = &j->at("result");
    if (j->is_object() && j->contains("spectrum")) j = &j->at("spectrum");
    if (!j->is_object() || j->empty())
        throw validation_error("no spectrum found in the input JSON");
    std::map<long, double> out;
    for (const auto& [key, value] : j->items()) {
        const long w = parse_weight_key(key);
        if (value.is_string())
            out[w] = big_to_double(parse_big(value.get<std::string>()));
        else if (value.is_number())
            out[w] = value.get<double>();
        else if (value.is_object() && value.contains("num") && value.contains("exp2"))
            out[w] = DyadicRational(parse_big(value.at("num").get<std::string>()),
                                    value.at("exp2").get<long>())
                         .to_double();
        else
            throw validation_error("unrecognized spectrum entry for weight " + key);
    }
    return out;
}

std::string spectrum_csv(const WeightSpectrum& spectrum) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : spectrum.entries()) os << w << ',' << c.str() << '\n';
    return os.str();
}

std::string spectrum_csv(const AvgSpectrum& spectrum) {
    std::ostringstream os;
    os << "weight,num,exp2,approx\n";
    for (const auto& [w, v] : spectrum.entries)
        os << w << ',' << v.num.str() << ',' << v.exp2 << ',' << v.to_double() << '\n';
    return os.str();
}

std::string union_bound_csv(std::span<const UnionBoundPoint> curve) {
    std::ostringstream os;
    os << "sigma,bound\n";
    for (const auto& p : curve) os << p.sigma << ',' << p.value << '\n';
    return os.str();
}

std::string prefix_table_csv(const PrefixWeightTable& table) {
    std::ostringstream os;
    os << "weight";
    for (int a = 0; a <= table.a_max; ++a) os << ',' << a;
    os << '\n';
    for (long w = 0; w <= table.row_weight; ++w) {
        bool all_zero = true;
        for (int a = 0; a <= table.a_max && all_zero; ++a)
            if (table.p_value(w, a) != 0) all_zero = false;
        if (all_zero) continue;
        os << w;
        for (int a = 0; a <= table.a_max; ++a) os << ',' << table.p_value(w, a).str();
        os << '\n';
    }
    return os.str();
}

} // namespace polarws
