#ifndef COVDEPTH_ERRORS_HPP
#define COVDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covdepth {

struct NotPrimePower : std::runtime_error {
  explicit NotPrimePower(const std::string& msg) : std::runtime_error(msg) {}
};

struct MixedFields : std::runtime_error {
  explicit MixedFields(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionOutOfRange : std::runtime_error {
  explicit DimensionOutOfRange(const std::string& msg) : std::runtime_error(msg) {}
};

struct EnumerationTooLarge : std::runtime_error {
  explicit EnumerationTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroColumn : std::runtime_error {
  explicit ZeroColumn(const std::string& msg) : std::runtime_error(msg) {}
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& msg) : std::runtime_error(msg) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct SearchTooLarge : std::runtime_error {
  explicit SearchTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParams : std::runtime_error {
  explicit InvalidParams(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConstraintViolation : std::runtime_error {
  explicit ConstraintViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularDenominator : std::runtime_error {
  explicit SingularDenominator(const std::string& msg) : std::runtime_error(msg) {}
};

struct MaxSamplesExceeded : std::runtime_error {
  explicit MaxSamplesExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace covdepth

#endif
