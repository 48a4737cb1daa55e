#include "polarws/union_bound.hpp"

#include <cmath>

namespace polarws {

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

std::vector<UnionBoundPoint> union_bound(const std::map<long, double>& spectrum,
                                         std::span<const double> sigmas,
                                         const UnionBoundOptions& options) {
    if (spectrum.empty()) throw validation_error("union_bound: empty spectrum");
    std::vector<UnionBoundPoint> out;
    out.reserve(sigmas.size());
    for (double sigma : sigmas) {
        if (!(sigma > 0)) throw validation_error("union_bound: sigma must be positive");
        double bound = 0;
        for (const auto& [d, count] : spectrum) {
            const double arg = std::sqrt(static_cast<double>(d)) / sigma;
            bound += count * gaussian_q(options.paper_literal_sign ? -arg : arg);
        }
        out.push_back({sigma, bound});
    }
    return out;
}

std::map<long, double> to_double_spectrum(const WeightSpectrum& spectrum) {
    std::map<long, double> out;
    for (const auto& [w, c] : spectrum.entries()) out.emplace(w, big_to_double(c));
    return out;
}

std::map<long, double> to_double_spectrum(const AvgSpectrum& spectrum) {
    std::map<long, double> out;
    for (const auto& [w, v] : spectrum.entries) out.emplace(w, v.to_double());
    return out;
}

std::vector<UnionBoundPoint> union_bound(const WeightSpectrum& spectrum,
                                         std::span<const double> sigmas,
                                         const UnionBoundOptions& options) {
    return union_bound(to_double_spectrum(spectrum), sigmas, options);
}

std::vector<UnionBoundPoint> union_bound(const AvgSpectrum& spectrum,
                                         std::span<const double> sigmas,
                                         const UnionBoundOptions& options) {
    return union_bound(to_double_spectrum(spectrum), sigmas, options);
}

} // namespace polarws
