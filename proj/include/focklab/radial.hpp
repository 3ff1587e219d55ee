#pragma once

#include "focklab/norms.hpp"

namespace focklab {

// Radial symbol phi(n) = c1 + c2 (-1)^n + psi(n) with psi finitely
// supported. The completely bounded norm of the induced multiplier equals
// |c1| + |c2| + trace norm of the Hankel matrix of second differences
// B[i][j] = phi(i+j) - phi(i+j+2), which depends on psi alone.
struct RadialSymbol {
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<double> psi;

    double phi(int n) const {
        double v = c1 + (n % 2 ? -c2 : c2);
        if (n >= 0 && n < int(psi.size())) v += psi[n];
        return v;
    }
    int support_bound() const { return int(psi.size()) - 1; }  // -1 when psi = 0
    bool finitely_supported() const { return c1 == 0.0 && c2 == 0.0; }
};

RadialSymbol rs_finite(std::vector<double> values);
RadialSymbol rs_geometric(double t);              // psi(k) = exp(-k t), size ceil(30/t)
RadialSymbol rs_cutoff(int d);                    // indicator of degrees <= d
RadialSymbol rs_general(double c1, double c2, std::vector<double> psi);

// split phi samples into c1 + c2 (-1)^n + psi; the tail of psi over the
// given range must vanish within 1e-12
RadialSymbol decompose_phi(const std::vector<double>& values, double c1, double c2);

Eigen::MatrixXd hankel_matrix(const RadialSymbol& s, int size = -1);

struct RadialNormReport {
    double c1 = 0.0;
    double c2 = 0.0;
    int support = -1;
    double hankel_trace_norm = 0.0;
    double total = 0.0;
};
RadialNormReport radial_norm_report(const RadialSymbol& s);
double radial_norm(const RadialSymbol& s);

double projection_pd_norm(int d);
std::vector<double> circulant_reference(int d);  // sorted descending

struct PdRow {
    int d = 0;
    double norm = 0.0;
    double asymptote = 0.0;
    double ratio = 0.0;
    double circulant_dev = 0.0;
};
PdRow pd_row(int d);
std::vector<PdRow> pd_table(int max_d);

struct HaagerupElement {
    double t = 0.0;
    int d = -1;
    double certificate = 0.0;
    double telescope_bound = 0.0;
    bool capped = false;           // search cap 10000 hit
    bool monotone_past = true;     // certificates nonincreasing on [d, d+5]
    std::vector<double> certs_past;
};
HaagerupElement haagerup_net(int n, int cap = 10000);

SparseVec apply_radial_symbol(const RadialSymbol& s, const FockSpace& fs,
                              const SparseVec& symbol);
Vec apply_radial_symbol(const RadialSymbol& s, const FockSpace& fs, const Vec& symbol);

}  // namespace focklab
