#ifndef POLARWS_ERRORS_HPP
#define POLARWS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarws {

// Invalid user input: out-of-range parameters, malformed sets, patterns
// that a formula was not proven for, and so on.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or sampling request exceeded a configured safety cap.
class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polarws

#endif
