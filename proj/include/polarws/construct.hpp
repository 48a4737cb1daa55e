#ifndef POLARWS_CONSTRUCT_HPP
#define POLARWS_CONSTRUCT_HPP

#include "polarws/monomial.hpp"

#include <optional>

namespace polarws {

// Information-set construction by polarization weight: rank rows by the
// beta-expansion sum beta^j over the set bits of the reliability coordinate
// (beta = 2^{1/4}) and keep the K most reliable.  Ties, which only occur
// between order-incomparable rows, are broken towards the larger row index.
// The result is always decreasing.  The optional rate-matched length E is
// validated against K and N.
CodeSpec pw_construct(int m, int k, std::optional<int> rate_matched_length = std::nullopt);

// Rows of [1, 2^m] ordered from most to least reliable under the same ranking.
std::vector<int> pw_reliability_order(int m);

} // namespace polarws

#endif
