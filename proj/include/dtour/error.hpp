#pragma once

#include <stdexcept>
#include <string>

namespace dtour {

/// Malformed tournament/point/chamber documents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by exhaustive searches that refuse instances above their cap. The
/// question was not answered, which is different from a negative answer.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point configuration or chamber point lying on a hyperplane.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dtour
