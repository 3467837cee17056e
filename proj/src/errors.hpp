#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class errc {
  invalid_argument,
  division_by_zero,
  not_polynomial,
  pole_at_point,
  index_out_of_range,
  ambient_mismatch,
  not_square_free,
  does_not_fit,
  malformed_spec,
  invalid_product,
  size_mismatch,
  singular_pivot,
  io_error,
};

/// Base of every exception thrown by this library. The code survives the
/// trip through the C API boundary.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

struct division_by_zero : error {
  explicit division_by_zero(const std::string& w = "division by zero") : error(errc::division_by_zero, w) {}
};
struct not_polynomial : error {
  explicit not_polynomial(const std::string& w = "denominator does not divide numerator") : error(errc::not_polynomial, w) {}
};
struct pole_at_point : error {
  explicit pole_at_point(const std::string& w = "denominator vanishes at evaluation point") : error(errc::pole_at_point, w) {}
};
struct index_out_of_range : error {
  explicit index_out_of_range(const std::string& w = "generator index out of range") : error(errc::index_out_of_range, w) {}
};
struct ambient_mismatch : error {
  explicit ambient_mismatch(const std::string& w = "operands live in different algebras") : error(errc::ambient_mismatch, w) {}
};
struct not_square_free : error {
  explicit not_square_free(const std::string& w = "word repeats a generator") : error(errc::not_square_free, w) {}
};
struct does_not_fit : error {
  explicit does_not_fit(const std::string& w = "object does not fit the ambient algebra") : error(errc::does_not_fit, w) {}
};
struct malformed_spec : error {
  explicit malformed_spec(const std::string& w = "malformed cut-sequence description") : error(errc::malformed_spec, w) {}
};
struct invalid_product : error {
  explicit invalid_product(const std::string& w = "invalid Murphy operator product") : error(errc::invalid_product, w) {}
};
struct size_mismatch : error {
  explicit size_mismatch(const std::string& w = "partition sizes differ") : error(errc::size_mismatch, w) {}
};
struct singular_pivot : error {
  explicit singular_pivot(const std::string& w = "pivot coefficient vanished while solving") : error(errc::singular_pivot, w) {}
};
struct invalid_argument_error : error {
  explicit invalid_argument_error(const std::string& w) : error(errc::invalid_argument, w) {}
};
struct io_error : error {
  explicit io_error(const std::string& w) : error(errc::io_error, w) {}
};

}  // namespace hecke
