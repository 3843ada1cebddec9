#pragma once

#include "ivqrof/fuzzy.hpp"

namespace ivqrof {

// Scalar Hamacher family on [0,1]. phi = 1 gives the probabilistic
// operations, phi = 2 the Einstein ones.

/// t-conorm: (a + b - ab - (1 - phi) ab) / (1 - (1 - phi) ab); neutral element 0.
double h_sum_scalar(double a, double b, double phi);
/// t-norm: ab / (phi + (1 - phi)(a + b - ab)); neutral element 1.
double h_prod_scalar(double a, double b, double phi);
/// theta-fold t-conorm of s with itself (real theta > 0).
double h_multiple_scalar(double s, double theta, double phi);
/// theta-fold t-norm of t with itself (real theta > 0).
double h_power_scalar(double t, double theta, double phi);

// Hamacher operations on IVq-ROFNs. Each one maps endpoints to q-th powers,
// applies the scalar form above (the t-conorm on the side being "added", the
// t-norm on the other), and takes q-th roots.

IVqROFN h_sum(const IVqROFN& a, const IVqROFN& b, const AggParams& p);
IVqROFN h_prod(const IVqROFN& a, const IVqROFN& b, const AggParams& p);
IVqROFN h_scalar_mul(double theta, const IVqROFN& a, const AggParams& p);
IVqROFN h_power(const IVqROFN& a, double theta, const AggParams& p);

}  // namespace ivqrof
