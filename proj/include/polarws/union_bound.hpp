#ifndef POLARWS_UNION_BOUND_HPP
#define POLARWS_UNION_BOUND_HPP

#include "polarws/coset.hpp"
#include "polarws/monomial.hpp"

#include <map>
#include <span>
#include <vector>

namespace polarws {

// Gaussian tail Q(x) = P(Z > x) for a standard normal Z.
double gaussian_q(double x);

struct UnionBoundPoint {
    double sigma = 0;
    double value = 0;
};

struct UnionBoundOptions {
    // Reproduce the literal printed bound Q(-sqrt(d)/sigma); the default uses
    // the decaying tail Q(sqrt(d)/sigma).
    bool paper_literal_sign = false;
};

// ML union bound sum_d A_d * Q(sqrt(d)/sigma) over the given spectrum, one
// point per noise level.  Counts are converted to floating point last.
std::vector<UnionBoundPoint> union_bound(const std::map<long, double>& spectrum,
                                         std::span<const double> sigmas,
                                         const UnionBoundOptions& options = {});

std::map<long, double> to_double_spectrum(const WeightSpectrum& spectrum);
std::map<long, double> to_double_spectrum(const AvgSpectrum& spectrum);

std::vector<UnionBoundPoint> union_bound(const WeightSpectrum& spectrum,
                                         std::span<const double> sigmas,
                                         const UnionBoundOptions& options = {});
std::vector<UnionBoundPoint> union_bound(const AvgSpectrum& spectrum,
                                         std::span<const double> sigmas,
                                         const UnionBoundOptions& options = {});

} // namespace polarws

#endif
