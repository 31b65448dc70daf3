#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperfns {

using Complex = std::complex<double>;

// Distance below which an argument counts as sitting on a nonpositive integer.
inline constexpr double pole_eps = 1e-9;

enum class Status {
  Regular,
  Regularized,   // value is an analytic limit at a pole
  NearPole,      // regular but inside the ill-conditioned annulus around a pole
  Pole,
  Zero,
  Overflow,
  AccuracyLoss,
};

struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  Status status = Status::Regular;

  // Pole and Overflow carry no usable value.
  bool usable() const { return status != Status::Pole && status != Status::Overflow; }
};

enum class ErrorCode {
  PoleAtNonpositiveInteger,
  ParameterPole,
  SeriesPole,
  SlowConvergence,
  OutOfDomain,
  DomainViolation,
  IntegrandPole,
  QuadratureBudgetExceeded,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(Status s);
const char* to_string(ErrorCode c);

// Exact element of (1/2)Z, stored as twice its value.
struct Half {
  std::int64_t twice = 0;

  static constexpr Half from_int(std::int64_t n) { return Half{2 * n}; }
  double value() const { return 0.5 * static_cast<double>(twice); }
  bool is_integer() const { return twice % 2 == 0; }

  friend constexpr Half operator+(Half a, Half b) { return Half{a.twice + b.twice}; }
  friend constexpr Half operator-(Half a, Half b) { return Half{a.twice - b.twice}; }
  friend constexpr Half operator-(Half a) { return Half{-a.twice}; }
  friend constexpr bool operator==(Half a, Half b) { return a.twice == b.twice; }
  friend constexpr auto operator<=>(Half a, Half b) { return a.twice <=> b.twice; }
};

std::string to_string(Half h);

// Nearest element of (1/2)Z when z is within tol of one.
bool near_half_integer(Complex z, double tol, Half* out);

}  // namespace hyperfns
