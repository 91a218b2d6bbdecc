#pragma once

#include <stdexcept>

namespace bellkit {

// Raised when a requested computation would exceed the documented size
// guards (matrix cells, enumeration space, symmetry group closure).
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bellkit
