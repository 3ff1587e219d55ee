#pragma once

#include "focklab/ops.hpp"

namespace focklab {

struct NormReport {
    double value = 0.0;
    std::string method;   // dense-svd | power-iteration | trace-norm-svd
    int iterations = 0;
    double residual = 0.0;
    bool converged = true;
};

inline constexpr index_t kDenseNormCutoff = 2000;
inline constexpr int kPowerIterCap = 10000;
inline constexpr double kPowerIterTol = 1e-12;

std::vector<double> matrix_singular_values(const Mat& m);
double matrix_op_norm(const Mat& m);

// sum of singular values
NormReport trace_norm_report(const Mat& m);
double trace_norm(const Mat& m);

// norm of the compressed operator P_L x P_L, dense SVD for small spaces,
// power iteration on x*x above the cutoff
NormReport operator_norm(const Op& x, const FockSpace& fs);
NormReport power_norm(const Op& x, const FockSpace& fs,
                      int cap = kPowerIterCap, double tol = kPowerIterTol);

}  // namespace focklab
