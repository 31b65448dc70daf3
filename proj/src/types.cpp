#include "hyperfns/types.hpp"

namespace hyperfns {

const char* to_string(Status s) {
  switch (s) {
    case Status::Regular: return "regular";
    case Status::Regularized: return "regularized";
    case Status::NearPole: return "near_pole";
    case Status::Pole: return "pole";
    case Status::Zero: return "zero";
    case Status::Overflow: return "overflow";
    case Status::AccuracyLoss: return "accuracy_loss";
  }
  return "unknown";
}

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::ParameterPole: return "ParameterPole";
    case ErrorCode::SeriesPole: return "SeriesPole";
    case ErrorCode::SlowConvergence: return "SlowConvergence";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::IntegrandPole: return "IntegrandPole";
    case ErrorCode::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "unknown";
}

std::string to_string(Half h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

bool near_half_integer(Complex z, double tol, Half* out) {
  if (std::abs(z.imag()) > tol) return false;
  double t = std::round(2.0 * z.real());
  if (std::abs(2.0 * z.real() - t) > 2.0 * tol) return false;
  if (out) out->twice = static_cast<std::int64_t>(t);
  return true;
}

}  // namespace hyperfns
