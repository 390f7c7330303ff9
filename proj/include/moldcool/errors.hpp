#pragma once

#include <stdexcept>

namespace moldcool {

// Invalid input data: a field violates a documented invariant, or a model
// precondition does not hold.  Messages name the offending record or field
// and the rule that failed.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file that cannot be read, or whose contents do not parse as the
// documented format.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace moldcool
