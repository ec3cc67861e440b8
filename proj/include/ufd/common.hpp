#ifndef UFD_COMMON_HPP
#define UFD_COMMON_HPP

#include <stdexcept>
#include <string>

namespace ufd {

// Absolute tolerance used for every threshold comparison: a test "d <= delta"
// is evaluated as "d <= delta + kTol" throughout the library.
inline constexpr double kTol = 1e-9;

// Hard cap on enumeration sizes (realisations, grid points, vector states).
inline constexpr std::size_t kEnumerationCap = 1'000'000;

// Invalid argument: dimension mismatch, empty curve, bad parameter range.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation does not support the given uncertainty model.
struct unsupported_model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed kEnumerationCap.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition (separation, equal lengths, ...) is violated.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The minimum Frechet distance is zero, so a relative approximation target
// is meaningless; callers should run the dedicated zero test instead.
struct zero_distance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ufd

#endif
