#include "focklab/radial.hpp"

#include <cmath>
#include <numbers>

namespace focklab {

namespace {

void trim(std::vector<double>& v) {
    while (!v.empty() && v.back() == 0.0) v.pop_back();
}

}  // namespace

RadialSymbol rs_finite(std::vector<double> values) {
    trim(values);
    return RadialSymbol{0.0, 0.0, std::move(values)};
}

RadialSymbol rs_geometric(double t) {
    if (!(t > 0.0)) throw input_error("geometric symbol needs t > 0");
    int n = int(std::ceil(30.0 / t));
    std::vector<double> psi(n + 1);
    for (int k = 0; k <= n; ++k) psi[k] = std::exp(-t * k);
    return RadialSymbol{0.0, 0.0, std::move(psi)};
}

RadialSymbol rs_cutoff(int d) {
    if (d < 0) throw input_error("cutoff degree must be >= 0");
    return RadialSymbol{0.0, 0.0, std::vector<double>(d + 1, 1.0)};
}

RadialSymbol rs_general(double c1, double c2, std::vector<double> psi) {
    trim(psi);
    return RadialSymbol{c1, c2, std::move(psi)};
}

RadialSymbol decompose_phi(const std::vector<double>& values, double c1, double c2) {
    std::vector<double> psi(values.size());
    for (size_t n = 0; n < values.size(); ++n)
        psi[n] = values[n] - c1 - (n % 2 ? -c2 : c2);
    for (size_t k = psi.size() >= 2 ? psi.size() - 2 : 0; k < psi.size(); ++k)
        if (std::abs(psi[k]) > 1e-12)
            throw input_error("phi tail inconsistent with declared (c1, c2): psi(" +
                              std::to_string(k) + ") = " + std::to_string(psi[k]));
    trim(psi);
    return RadialSymbol{c1, c2, std::move(psi)};
}

Eigen::MatrixXd hankel_matrix(const RadialSymbol& s, int size) {
    int n = size >= 0 ? size : std::max(s.support_bound() + 1, 1);
    auto psi = [&](int k) {
        return k >= 0 && k < int(s.psi.size()) ? s.psi[k] : 0.0;
    };
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = psi(i + j) - psi(i + j + 2);
    return b;
}

RadialNormReport radial_norm_report(const RadialSymbol& s) {
    RadialNormReport r;
    r.c1 = s.c1;
    r.c2 = s.c2;
    r.support = s.support_bound();
    r.hankel_trace_norm = s.psi.empty() ? 0.0 : trace_norm(hankel_matrix(s).cast<cplx>());
    r.total = std::abs(s.c1) + std::abs(s.c2) + r.hankel_trace_norm;
    return r;
}

double radial_norm(const RadialSymbol& s) { return radial_norm_report(s).total; }

double projection_pd_norm(int d) { return radial_norm(rs_cutoff(d)); }

std::vector<double> circulant_reference(int d) {
    std::vector<double> v(d + 1);
    for (int k = 0; k <= d; ++k)
        v[k] = std::abs(cplx(1.0) + std::exp(cplx(0.0, 2.0 * std::numbers::pi * k / (d + 1))));
    std::sort(v.rbegin(), v.rend());
    return v;
}

PdRow pd_row(int d) {
    PdRow r;
    r.d = d;
    Eigen::MatrixXd b = hankel_matrix(rs_cutoff(d));
    r.norm = trace_norm(b.cast<cplx>());
    r.asymptote = 4.0 / std::numbers::pi * d;
    r.ratio = r.norm / r.asymptote;
    Eigen::MatrixXd bc = b;
    bc(d, d) += 1.0;
    auto sv = matrix_singular_values(bc.cast<cplx>());
    auto ref = circulant_reference(d);
    double dev = 0.0;
    for (int k = 0; k <= d; ++k) dev = std::max(dev, std::abs(sv[k] - ref[k]));
    r.circulant_dev = dev;
    return r;
}

std::vector<PdRow> pd_table(int max_d) {
    std::vector<PdRow> rows(max_d + 1);
#pragma omp parallel for schedule(dynamic)
    for (int d = 0; d <= max_d; ++d) rows[d] = pd_row(d);
    return rows;
}

HaagerupElement haagerup_net(int n, int cap) {
    if (n < 1) throw input_error("haagerup net index must be >= 1");
    HaagerupElement e;
    e.t = 1.0 / n;
    double target = 1.0 + 1.0 / n;
    std::map<int, double> memo;
    auto cert_at = [&](int d) {
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
        std::vector<double> psi(d + 1);
        for (int k = 0; k <= d; ++k) psi[k] = std::exp(-e.t * k);
        double c = radial_norm(rs_finite(std::move(psi)));
        memo.emplace(d, c);
        return c;
    };
    // Smallest d whose certificate meets the target and stays nonincreasing
    // over the next five cutoffs. Without the window the search would stop
    // at d = 0 (the vacuum projection, norm exactly 1), a degenerate element
    // whose certificates jump back above the target immediately after.
    for (int d = 0; d <= cap; ++d) {
        if (cert_at(d) > target) continue;
        bool window_ok = true;
        double prev = cert_at(d);
        for (int k = d + 1; k <= d + 5; ++k) {
            double c = cert_at(k);
            if (c > prev + 1e-12) {
                window_ok = false;
                break;
            }
            prev = c;
        }
        if (!window_ok) continue;
        e.d = d;
        e.certificate = cert_at(d);
        break;
    }
    if (e.d < 0) {
        e.capped = true;
        return e;
    }
    double x = std::exp(-e.t);
    // sum_{k >= d+1} 2 k x^k in closed form
    int m = e.d + 1;
    e.telescope_bound =
        1.0 + 2.0 * std::pow(x, m) * (m - (m - 1) * x) / ((1.0 - x) * (1.0 - x));
    double prev = e.certificate;
    for (int d = e.d + 1; d <= e.d + 5; ++d) {
        double cert = cert_at(d);
        e.certs_past.push_back(cert);
        if (cert > prev + 1e-12) e.monotone_past = false;
        prev = cert;
    }
    return e;
}

SparseVec apply_radial_symbol(const RadialSymbol& s, const FockSpace& fs,
                              const SparseVec& symbol) {
    SparseVec out;
    for (const auto& [idx, amp] : symbol) {
        double f = s.phi(degree_of(fs, idx));
        if (f != 0.0) out[idx] = f * amp;
    }
    return out;
}

Vec apply_radial_symbol(const RadialSymbol& s, const FockSpace& fs, const Vec& symbol) {
    Vec out(fs.total);
    for (int nn = 0; nn <= fs.L; ++nn)
        out.segment(fs.off[nn], fs.degree_size(nn)) =
            s.phi(nn) * symbol.segment(fs.off[nn], fs.degree_size(nn));
    return out;
}

}  // namespace focklab
