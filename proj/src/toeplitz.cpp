#include "focklab/toeplitz.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

namespace focklab {

SPoly sp_zero(int deg) { return SPoly{Mat::Zero(deg + 1, deg + 1)}; }

SPoly sp_monomial(int i, int j, cplx a) {
    SPoly p = sp_zero(std::max(i, j));
    p.c(i, j) = a;
    return p;
}

SPoly sp_add(const SPoly& a, const SPoly& b) {
    SPoly out = sp_zero(std::max(a.deg(), b.deg()));
    out.c.topLeftCorner(a.c.rows(), a.c.cols()) = a.c;
    out.c.topLeftCorner(b.c.rows(), b.c.cols()) += b.c;
    return out;
}

SPoly sp_scale(cplx a, const SPoly& x) { return SPoly{a * x.c}; }

SPoly sp_mul(const SPoly& a, const SPoly& b) {
    // (S^i S^*j)(S^k S^*l) collapses through S*S = 1
    int da = a.deg(), db = b.deg();
    SPoly out = sp_zero(da + db);
    for (int i = 0; i <= da; ++i)
        for (int j = 0; j <= da; ++j) {
            cplx av = a.c(i, j);
            if (av == cplx(0.0)) continue;
            for (int k = 0; k <= db; ++k)
                for (int l = 0; l <= db; ++l) {
                    cplx bv = b.c(k, l);
                    if (bv == cplx(0.0)) continue;
                    if (k >= j) out.c(i + k - j, l) += av * bv;
                    else out.c(i, j - k + l) += av * bv;
                }
        }
    return out;
}

SPoly sp_adjoint(const SPoly& x) { return SPoly{x.c.adjoint()}; }

double sp_l1(const SPoly& x) { return x.c.cwiseAbs().sum(); }

Mat sp_matrix(const SPoly& x, int N) {
    Mat m = Mat::Zero(N + 1, N + 1);
    for (int i = 0; i <= x.deg(); ++i)
        for (int j = 0; j <= x.deg(); ++j) {
            cplx v = x.c(i, j);
            if (v == cplx(0.0)) continue;
            for (int q = j; q <= N; ++q) {
                int p = q - j + i;
                if (p <= N) m(p, q) += v;
            }
        }
    return m;
}

cplx sp_gamma(const RadialSymbol& s, const SPoly& x) {
    cplx g(0.0);
    for (int i = 0; i <= x.deg(); ++i)
        for (int j = 0; j <= x.deg(); ++j)
            if (x.c(i, j) != cplx(0.0)) g += x.c(i, j) * s.phi(i + j);
    return g;
}

namespace {

// upper bound for lambda_max of a self-adjoint normal-ordered polynomial:
// Z = bilateral Laurent operator of its limiting symbol plus a finite
// corner defect, and the half-line operator is a compression of that sum
double selfadjoint_lmax_upper(const SPoly& z) {
    int D = z.deg();
    std::vector<cplx> zh(2 * D + 1, cplx(0.0));  // zh[k + D] = sum_{i-j=k} c(i,j)
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j) zh[i - j + D] += z.c(i, j);

    const int grid = 16384;
    double maxh = -1e300, lip = 0.0;
    for (int k = -D; k <= D; ++k) lip += std::abs(double(k)) * std::abs(zh[k + D]);
    for (int g = 0; g < grid; ++g) {
        double th = 2.0 * std::numbers::pi * g / grid;
        cplx w = std::exp(cplx(0.0, th));
        cplx p = std::exp(cplx(0.0, -D * th));
        cplx h(0.0);
        for (int k = 0; k <= 2 * D; ++k) {
            h += zh[k] * p;
            p *= w;
        }
        maxh = std::max(maxh, std::real(h));
    }
    maxh += lip * std::numbers::pi / grid;

    int K = 2 * D;
    double lmaxF = 0.0;
    if (K > 0) {
        Mat zb = Mat::Zero(K, K);
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D; ++j) {
                cplx v = z.c(i, j);
                if (v == cplx(0.0)) continue;
                for (int q = j; q < K; ++q) {
                    int p = q - j + i;
                    if (p < K) zb(p, q) += v;
                }
            }
        Mat f = zb;
        for (int p = 0; p < K; ++p)
            for (int q = 0; q < K; ++q) {
                int k = p - q;
                if (k >= -D && k <= D) f(p, q) -= zh[k + D];
            }
        Mat fh = 0.5 * (f + f.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Mat> es(fh, Eigen::EigenvaluesOnly);
        lmaxF = std::max(0.0, es.eigenvalues().maxCoeff());
    }
    return maxh + lmaxF;
}

}  // namespace

double sp_norm_upper(const SPoly& x, int squarings) {
    double best = sp_l1(x);
    SPoly z = sp_mul(sp_adjoint(x), x);
    double expo = 0.5;
    for (int m = 0;; ++m) {
        double b = selfadjoint_lmax_upper(z);
        if (b <= 0.0) return 0.0;
        best = std::min(best, std::pow(b, expo));
        if (m >= squarings) break;
        z = sp_mul(z, z);
        expo *= 0.5;
    }
    return best;
}

namespace {

// x = sum W(a,b) (S^a S^*b - S^{a+1} S^*{b+1}) has corner matrix W; taking
// W as the polar phase of the Hankel block pairs gamma against the full
// trace norm with ||x|| = 1
SPoly polar_candidate(const RadialSymbol& s) {
    int n = std::max(s.support_bound() + 1, 1);
    Eigen::MatrixXd b = hankel_matrix(s, n);
    Eigen::JacobiSVD<Mat> svd(b.cast<cplx>(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat w = svd.matrixV() * svd.matrixU().adjoint();
    SPoly x = sp_zero(n);
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) {
            cplx v = w(a, bb);
            x.c(a, bb) += v;
            x.c(a + 1, bb + 1) -= v;
        }
    return x;
}

}  // namespace

ToeplitzWitnessReport toeplitz_lower_bound(const RadialSymbol& s, int N, int trials,
                                           std::uint64_t seed) {
    if (N < 1) throw input_error("toeplitz witness search needs N >= 1");
    ToeplitzWitnessReport rep;
    rep.radial = radial_norm(s);

    auto witness = [&](const SPoly& x, int squarings) {
        double u = sp_norm_upper(x, squarings);
        if (u < 1e-300) return 0.0;
        return std::abs(sp_gamma(s, x)) / u;
    };

    std::vector<std::pair<double, SPoly>> found;
    auto record = [&](const SPoly& x, int squarings) {
        double w = witness(x, squarings);
        rep.witnesses.push_back(w);
        found.emplace_back(w, x);
    };

    record(sp_monomial(0, 0, 1.0), 0);
    record(sp_add(sp_monomial(1, 0, 1.0), sp_monomial(0, 1, 1.0)), 1);
    if (s.support_bound() + 1 <= N) {
        SPoly p = polar_candidate(s);
        double w = witness(p, 1);
        rep.polar = w;
        rep.witnesses.push_back(w);
        found.emplace_back(w, p);
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int D = std::min(N, 6);
    for (int t = 0; t < trials; ++t) {
        SPoly x = sp_zero(D);
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D; ++j) x.c(i, j) = cplx(gauss(rng), gauss(rng));
        record(x, 1);
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    rep.best = 0.0;
    int refined = 0;
    for (const auto& [w0, x] : found) {
        if (refined++ >= 8) break;
        rep.best = std::max(rep.best, witness(x, 2));
    }
    for (double w : rep.witnesses)
        if (w > rep.radial + 1e-9) rep.sound = false;
    if (rep.best > rep.radial + 1e-9) rep.sound = false;
    return rep;
}

}  // namespace focklab
