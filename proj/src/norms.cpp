#include "focklab/norms.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <random>

namespace focklab {

std::vector<double> matrix_singular_values(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    if (std::max(m.rows(), m.cols()) <= 32) {
        Eigen::JacobiSVD<Mat> svd(m);
        auto s = svd.singularValues();
        return std::vector<double>(s.data(), s.data() + s.size());
    }
    Eigen::BDCSVD<Mat> svd(m);
    auto s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

double matrix_op_norm(const Mat& m) {
    auto s = matrix_singular_values(m);
    return s.empty() ? 0.0 : s.front();
}

NormReport trace_norm_report(const Mat& m) {
    NormReport r;
    r.method = "trace-norm-svd";
    double sum = 0.0;
    for (double s : matrix_singular_values(m)) sum += s;
    r.value = sum;
    return r;
}

double trace_norm(const Mat& m) { return trace_norm_report(m).value; }

NormReport power_norm(const Op& x, const FockSpace& fs, int cap, double tol) {
    NormReport r;
    r.method = "power-iteration";
    Op xadj = op_adjoint(x);
    int peak = std::max(op_profile(x).peak, op_profile(xadj).peak);
    FockSpace big = peak == 0 ? fs : make_fock(fs.d, fs.L + peak);

    std::mt19937_64 rng(0x0f0c1ab5eedULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(fs.total);
    for (index_t i = 0; i < fs.total; ++i) v[i] = cplx(gauss(rng), gauss(rng));
    v.normalize();

    auto step = [&](const Vec& in) {
        Vec w = dense_recut(dense_apply(x, big, dense_recut(in, fs, big)), big, fs);
        return dense_recut(dense_apply(xadj, big, dense_recut(w, fs, big)), big, fs);
    };

    double lam = 0.0;
    r.converged = false;
    for (int it = 1; it <= cap; ++it) {
        Vec u = step(v);
        double nl = std::real(v.dot(u));
        double nrm = u.norm();
        r.iterations = it;
        r.residual = std::abs(nl - lam);
        if (nrm < 1e-300) {
            r.value = 0.0;
            r.residual = 0.0;
            r.converged = true;
            return r;
        }
        v = u / nrm;
        if (it > 1 && r.residual <= tol * std::max(1.0, std::abs(nl))) {
            lam = nl;
            r.converged = true;
            break;
        }
        lam = nl;
    }
    r.value = std::sqrt(std::max(0.0, lam));
    return r;
}

NormReport operator_norm(const Op& x, const FockSpace& fs) {
    if (fs.total <= kDenseNormCutoff) {
        NormReport r;
        r.method = "dense-svd";
        r.value = matrix_op_norm(materialize(x, fs));
        return r;
    }
    return power_norm(x, fs);
}

}  // namespace focklab
