#include "ivqrof/hamacher.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ivqrof/error.hpp"
#include "kernels.hpp"

namespace ivqrof {

namespace {

void check_unit(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    std::ostringstream os;
    os << "Hamacher operand " << name << " = " << v << " is outside [0,1]";
    throw Error(ErrorCode::DomainError, os.str());
  }
}

void check_phi(double phi) {
  if (!(phi > 0.0) || !std::isfinite(phi)) {
    std::ostringstream os;
    os << "Hamacher parameter phi must be positive, got " << phi;
    throw Error(ErrorCode::NonPositivePhi, os.str());
  }
}

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    std::ostringstream os;
    os << "Hamacher scalar must be positive and finite, got " << theta;
    throw Error(ErrorCode::NonPositiveScalar, os.str());
  }
}

double checked(bool ok, double value, double den_hint, const char* op) {
  if (!ok) {
    std::ostringstream os;
    os << op << ": degenerate denominator near " << den_hint;
    throw Error(ErrorCode::NumericalDegeneracy, os.str());
  }
  return value;
}

double qroot(double s, double q) { return std::pow(std::clamp(s, 0.0, 1.0), 1.0 / q); }

}  // namespace

double h_sum_scalar(double a, double b, double phi) {
  check_unit(a, "a");
  check_unit(b, "b");
  check_phi(phi);
  double out = 0.0;
  const bool ok = kernel::hamacher_sum(a, b, phi, out);
  return checked(ok, out, 1.0 + (phi - 1.0) * a * b, "h_sum_scalar");
}

double h_prod_scalar(double a, double b, double phi) {
  check_unit(a, "a");
  check_unit(b, "b");
  check_phi(phi);
  double out = 0.0;
  const bool ok = kernel::hamacher_prod(a, b, phi, out);
  return checked(ok, out, phi + (1.0 - phi) * (a + b - a * b), "h_prod_scalar");
}

double h_multiple_scalar(double s, double theta, double phi) {
  check_unit(s, "s");
  check_theta(theta);
  check_phi(phi);
  double out = 0.0;
  const bool ok = kernel::hamacher_multiple(s, theta, phi, out);
  return checked(ok, out, 1.0 + (phi - 1.0) * s, "h_multiple_scalar");
}

double h_power_scalar(double t, double theta, double phi) {
  check_unit(t, "t");
  check_theta(theta);
  check_phi(phi);
  double out = 0.0;
  const bool ok = kernel::hamacher_power(t, theta, phi, out);
  return checked(ok, out, 1.0 + (phi - 1.0) * (1.0 - t), "h_power_scalar");
}

IVqROFN h_sum(const IVqROFN& a, const IVqROFN& b, const AggParams& p) {
  check_params(p);
  validate(a, p.q);
  validate(b, p.q);
  const double q = p.q;
  auto mu = [&](double u1, double u2) {
    return qroot(h_sum_scalar(std::pow(u1, q), std::pow(u2, q), p.phi), q);
  };
  auto nu = [&](double v1, double v2) {
    return qroot(h_prod_scalar(std::pow(v1, q), std::pow(v2, q), p.phi), q);
  };
  return {mu(a.mu_lo, b.mu_lo), mu(a.mu_hi, b.mu_hi), nu(a.nu_lo, b.nu_lo),
          nu(a.nu_hi, b.nu_hi)};
}

IVqROFN h_prod(const IVqROFN& a, const IVqROFN& b, const AggParams& p) {
  check_params(p);
  validate(a, p.q);
  validate(b, p.q);
  const double q = p.q;
  auto mu = [&](double u1, double u2) {
    return qroot(h_prod_scalar(std::pow(u1, q), std::pow(u2, q), p.phi), q);
  };
  auto nu = [&](double v1, double v2) {
    return qroot(h_sum_scalar(std::pow(v1, q), std::pow(v2, q), p.phi), q);
  };
  return {mu(a.mu_lo, b.mu_lo), mu(a.mu_hi, b.mu_hi), nu(a.nu_lo, b.nu_lo),
          nu(a.nu_hi, b.nu_hi)};
}

IVqROFN h_scalar_mul(double theta, const IVqROFN& a, const AggParams& p) {
  check_theta(theta);
  check_params(p);
  validate(a, p.q);
  const double q = p.q;
  auto mu = [&](double u) {
    return qroot(h_multiple_scalar(std::pow(u, q), theta, p.phi), q);
  };
  auto nu = [&](double v) {
    return qroot(h_power_scalar(std::pow(v, q), theta, p.phi), q);
  };
  return {mu(a.mu_lo), mu(a.mu_hi), nu(a.nu_lo), nu(a.nu_hi)};
}

IVqROFN h_power(const IVqROFN& a, double theta, const AggParams& p) {
  check_theta(theta);
  check_params(p);
  validate(a, p.q);
  const double q = p.q;
  auto mu = [&](double u) {
    return qroot(h_power_scalar(std::pow(u, q), theta, p.phi), q);
  };
  auto nu = [&](double v) {
    return qroot(h_multiple_scalar(std::pow(v, q), theta, p.phi), q);
  };
  return {mu(a.mu_lo), mu(a.mu_hi), nu(a.nu_lo), nu(a.nu_hi)};
}

}  // namespace ivqrof
