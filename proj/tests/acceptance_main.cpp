// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "focklab/deform.hpp"
#include "focklab/quantize.hpp"
#include "focklab/suites.hpp"
#include "focklab/toeplitz.hpp"

using namespace focklab;

namespace {

int failures = 0;

void report(int idx, const char* desc, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, desc,
                detail.c_str());
    if (!ok) ++failures;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

RepModel pairs_model(std::vector<RepSpec::Pair> pairs, int trivial, int L) {
    RepSpec spec;
    spec.pairs = std::move(pairs);
    spec.trivial_dim = trivial;
    spec.max_degree = L;
    return build_model(spec);
}

void criterion_1() {
    Timer timer;
    double v = radial_norm(rs_finite({0.0, 1.0}));
    double dt = timer.secs();
    bool ok = std::abs(v - 2.0) <= 1e-12 && dt < 0.1;
    report(1, "cb norm of the degree-one bump is 2", ok,
           "value " + num(v) + ", " + num(dt) + " s");
}

void criterion_2() {
    Timer timer;
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0})
        worst = std::max(worst, std::abs(radial_norm(rs_geometric(t)) - 1.0));
    double dt = timer.secs();
    bool ok = worst <= 1e-9 && dt < 1.0;
    report(2, "geometric symbols have unit cb norm", ok,
           "max error " + num(worst) + ", " + num(dt) + " s");
}

void criterion_3() {
    Timer timer;
    double r100 = pd_row(100).ratio;
    double r400 = pd_row(400).ratio;
    double dt = timer.secs();
    bool ok = std::abs(r100 - 1.0) <= 0.02 && std::abs(r400 - 1.0) <= 0.005 && dt < 30.0;
    report(3, "projection norms track (4/pi) d", ok,
           "ratio(100) " + num(r100) + ", ratio(400) " + num(r400) + ", " + num(dt) + " s");
}

void criterion_4() {
    double worst = 0.0;
    for (int d = 0; d <= 64; ++d) worst = std::max(worst, pd_row(d).circulant_dev);
    report(4, "circulant closed form matches the corner-completed SVD", worst <= 1e-8,
           "max deviation " + num(worst));
}

void criterion_5() {
    SuiteReport rep = run_suite("wick", 0);
    report(5, "wick words reproduce their symbols and recursion", rep.pass,
           std::to_string(rep.cases) + " cases, max residual " + num(rep.max_residual));
}

void criterion_6() {
    double worst = 0.0;
    const double catalan[] = {1.0, 1.0, 2.0, 5.0, 14.0, 42.0};
    for (const RepModel& m : {pairs_model({}, 1, 10), pairs_model({{2.0, 1}}, 0, 10)}) {
        Vec xi = m.kr.col(0);
        for (int k = 0; k <= 5; ++k) {
            worst = std::max(worst, std::abs(state_moment(m, xi, 2 * k) - catalan[k]));
            if (k > 0)
                worst = std::max(worst, std::abs(state_moment(m, xi, 2 * k - 1)));
        }
    }
    report(6, "semicircular moments are the Catalan numbers", worst <= 1e-10,
           "max error " + num(worst));
}

void criterion_7() {
    SuiteReport rep = run_suite("twopoint", 0);
    report(7, "two point function matches the closed form", rep.pass,
           std::to_string(rep.cases) + " pairs, max residual " + num(rep.max_residual));
}

void criterion_8() {
    RepModel m = pairs_model({{2.0, 1}, {4.0, 1}}, 1, 4);
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g(0.0, 1.0);
    double state_worst = 0.0, symbol_worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        double t = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
        int n = 1 + int(rng() % 3);
        std::vector<int> w(n);
        for (int& c : w) c = int(rng() % m.d);
        Op x = wick_basis_op(m, w);

        cplx drift = vacuum_expectation(modular_conjugate(m, t, x), m.fock) -
                     vacuum_expectation(x, m.fock);
        state_worst = std::max(state_worst, std::abs(drift));

        SparseVec lhs = op_to_symbol(modular_conjugate(m, t, x), m.fock);
        SparseVec rhs = modular_flow_symbol(m, t, op_to_symbol(x, m.fock));
        sv_axpy(lhs, cplx(-1.0), rhs);
        symbol_worst = std::max(symbol_worst, sv_norm(lhs));

        Vec zeta(m.d);
        for (int j = 0; j < m.d; ++j) zeta[j] = cplx(g(rng), g(rng));
        SparseVec sym = op_to_symbol(modular_conjugate(m, t, field_op(m, zeta)), m.fock);
        Vec uz = mod_unitary(m, t) * zeta;
        for (int j = 0; j < m.d; ++j)
            sv_axpy(sym, cplx(-1.0), SparseVec{{m.fock.off[1] + j, uz[j]}});
        symbol_worst = std::max(symbol_worst, sv_norm(sym));
    }
    bool ok = state_worst <= 1e-10 && symbol_worst <= 1e-12;
    report(8, "modular flow preserves the state and moves letters", ok,
           "state " + num(state_worst) + ", symbol " + num(symbol_worst));
}

void criterion_9() {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g(0.0, 1.0);
    double min_slack = 1e300;
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            Mat ge(n, n), gf(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    ge(i, j) = cplx(g(rng), g(rng));
                    gf(i, j) = cplx(g(rng), g(rng));
                }
            Mat qe = Eigen::HouseholderQR<Mat>(ge).householderQ();
            Mat qf = Eigen::HouseholderQR<Mat>(gf).householderQ();
            std::vector<Vec> es, fs;
            std::vector<cplx> alphas;
            for (int i = 0; i < n; ++i) {
                es.push_back(qe.col(i));
                fs.push_back(qf.col(i));
                double r = std::min(std::abs(g(rng)), 1.0);
                alphas.push_back(std::polar(r, g(rng)));
            }
            MajfReport rep = majf_check(2, alphas, es, fs);
            min_slack = std::min(min_slack, std::min(rep.slack_mixed, rep.slack_raising));
        }
    }
    report(9, "averaged creation products obey the 1/n and 1/sqrt(n) bounds",
           min_slack >= -1e-10, "min slack " + num(min_slack));
}

void criterion_10() {
    RepModel m = pairs_model({{2.0, 1}}, 1, 4);
    double worst = 0.0;

    FunctorReport fid = toeplitz_functor_check(m, Mat::Identity(m.d, m.d), 10, 1);
    FunctorReport fmod = toeplitz_functor_check(m, mod_unitary(m, 0.7), 10, 2);
    Mat band = Mat::Zero(m.d, m.d);
    band(0, 0) = band(1, 1) = 1.0;
    FunctorReport fband = toeplitz_functor_check(m, band, 10, 3);
    bool functor_ok = fid.pass && fmod.pass && fband.pass;
    worst = std::max({fid.max_residual, fmod.max_residual, fband.max_residual});

    // unitality
    Mat gamma_id = materialize(first_quantization(make_contraction(m, Mat::Identity(m.d, m.d))),
                               m.fock);
    worst = std::max(worst,
                     (gamma_id - Mat::Identity(m.fock.total, m.fock.total)).cwiseAbs().maxCoeff());

    std::mt19937_64 rng(10);
    std::normal_distribution<double> g(0.0, 1.0);

    // contractivity and symbol transport for compatible contractions
    std::vector<ContractionSpec> pool;
    pool.push_back(make_contraction(m, 0.6 * mod_unitary(m, 1.3)));
    pool.push_back(merged_band_contraction(m, {0}, 0.4));
    pool.push_back(make_contraction(m, band));
    for (const ContractionSpec& t : pool) {
        double norm = operator_norm(first_quantization(t), m.fock).value;
        if (norm > 1.0 + 1e-12) worst = std::max(worst, norm - 1.0);
        for (int trial = 0; trial < 5; ++trial) {
            int n = 1 + int(rng() % 3);
            std::vector<int> w(n);
            for (int& c : w) c = int(rng() % m.d);
            SparseVec sym = op_to_symbol(wick_basis_op(m, w), m.fock);
            SparseVec moved = second_quantize_symbol(m, t, sym);
            // letterwise tensor power of the word
            std::vector<Vec> letters;
            for (int c : w) letters.push_back(Vec(t.T * basis_vec(m.d, c)));
            SparseVec expect;
            std::vector<int> digits(n, 0);
            bool done = false;
            while (!done) {
                cplx amp = 1.0;
                std::vector<int> word(n);
                for (int k = 0; k < n; ++k) {
                    amp *= letters[k][digits[k]];
                    word[k] = digits[k];
                }
                if (amp != cplx(0.0)) expect[index_of_word(m.fock, word)] += amp;
                int k = n - 1;
                while (k >= 0 && ++digits[k] == m.d) digits[k--] = 0;
                done = k < 0;
            }
            sv_axpy(expect, cplx(-1.0), moved);
            worst = std::max(worst, sv_norm(expect));
        }
    }
    bool quant_ok = functor_ok && worst <= 1e-12;

    // band approximants return exactly compatible projections close to F
    double defect_worst = 0.0;
    bool data_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        int count = 1 + int(rng() % 3);
        std::vector<Vec> f;
        for (int k = 0; k < count; ++k) {
            Vec v(m.d);
            for (int j = 0; j < m.d; ++j) v[j] = cplx(g(rng), g(rng));
            f.push_back(v.normalized());
        }
        double eps = 0.2 + 0.07 * double(rng() % 10);
        ContractionSpec t = band_approximant(m, f, eps);
        defect_worst = std::max(defect_worst, t.i_defect);
        for (const Vec& v : f)
            if ((t.T * v - v).norm() > eps * v.norm()) data_ok = false;
    }
    bool ok = quant_ok && defect_worst <= 1e-13 && data_ok;
    report(10, "second quantization is functorial and band approximants are compatible",
           ok, "max residual " + num(worst) + ", max ITI defect " + num(defect_worst));
}

void criterion_11() {
    Doubled dm = make_doubled(pairs_model({{2.0, 1}}, 1, 3));
    MalleabilityReport rep = malleability_residuals(dm, 20, 0);
    report(11, "deformation relations hold at degree 3", rep.pass && rep.max_residual <= 1e-12,
           std::to_string(rep.cases) + " cases, max residual " + num(rep.max_residual));
}

void criterion_12() {
    Doubled dm = make_doubled(pairs_model({{2.0, 1}}, 1, 3));
    const FockSpace& fs = dm.dbl.fock;
    std::vector<index_t> first;
    for (index_t i = 0; i < fs.total; ++i) {
        bool ok = true;
        for (int c : word_of_index(fs, i))
            if (c >= dm.base.d) { ok = false; break; }
        if (ok) first.push_back(i);
    }
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g(0.0, 1.0);
    double min_slack = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        Vec sym = Vec::Zero(fs.total);
        for (index_t idx : first) sym[idx] = cplx(g(rng), g(rng));
        sym /= sym.norm();
        double s = double(1 + int(rng() % 1000)) / 1000.0;  // s in (0, 1]
        min_slack = std::min(min_slack, transversality_residual(dm, sym, s).slack);
    }
    double eq_worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        Vec xi(dm.base.d);
        for (int j = 0; j < dm.base.d; ++j) xi[j] = cplx(g(rng), g(rng));
        Vec sym = Vec::Zero(fs.total);
        Vec emb = iota1(dm, xi);
        for (int j = 0; j < dm.dbl.d; ++j) sym[fs.off[1] + j] = emb[j];
        sym /= sym.norm();
        double s = double(1 + int(rng() % 1000)) / 1000.0;
        TransversalityReport rep = transversality_residual(dm, sym, s);
        eq_worst = std::max(eq_worst, std::abs(rep.lhs - rep.rhs));
    }
    bool ok = min_slack >= -1e-10 && eq_worst <= 1e-10;
    report(12, "transversality holds with equality in degree one", ok,
           "min slack " + num(min_slack) + ", degree-1 gap " + num(eq_worst));
}

void criterion_13() {
    double id_worst = 0.0, bound_slack = 1e300;
    for (int n : {2, 4, 9}) {
        RepModel m = pairs_model({{2.0, n}}, 0, 3);
        SnReport rep = sn_identity_check(m, n);
        id_worst = std::max(id_worst, rep.identity_residual);
        bound_slack = std::min(bound_slack,
                               3.0 / std::sqrt(double(n)) + 1e-10 - rep.norm_sum);
    }
    bool ok = id_worst <= 1e-12 && bound_slack >= 0.0;
    report(13, "quadratic sum identity and 3/sqrt(n) bound", ok,
           "identity " + num(id_worst) + ", bound slack " + num(bound_slack));
}

void criterion_14() {
    RepModel m = pairs_model({{2.0, 1}}, 1, 3);
    std::vector<Vec> frame;
    for (int j = 0; j < m.d; ++j) frame.push_back(m.kr.col(j));
    std::vector<std::vector<int>> words{{}, {0}, {0, 1}, {0, 1, 2}};

    bool monotone = true, shrinking = true;
    double cert20 = 0.0;
    std::vector<double> prev;
    for (int n : {1, 5, 20}) {
        HaagerupElement h = haagerup_net(n);
        if (h.capped || !h.monotone_past) monotone = false;
        if (n == 20) cert20 = h.certificate;

        std::vector<double> values(h.d + 1);
        for (int k = 0; k <= h.d; ++k) values[k] = std::exp(-h.t * k);
        CmapElement e = cmap_map(m, rs_finite(values),
                                 band_approximant(m, frame, 1.0 / (n + 1.0)));
        std::vector<double> residuals;
        for (const auto& w : words) {
            SparseVec probe{{index_of_word(m.fock, w), cplx(1.0)}};
            SparseVec r = cmap_apply(m, e, probe);
            sv_axpy(r, cplx(-1.0), probe);
            residuals.push_back(sv_norm(r));
        }
        if (!prev.empty())
            for (std::size_t k = 0; k < residuals.size(); ++k)
                if (residuals[k] > prev[k] + 1e-12) shrinking = false;
        prev = residuals;
    }
    bool ok = monotone && cert20 <= 1.05 && shrinking;
    report(14, "approximation net certificates shrink toward 1", ok,
           "certificate(20) " + num(cert20) + std::string(shrinking ? "" : ", probes grew"));
}

void criterion_15() {
    struct Probe {
        RadialSymbol s;
        int N;
        int trials;
    };
    std::vector<Probe> probes{{rs_finite({0.0, 1.0}), 8, 200},
                              {rs_general(1.0, 0.0, {}), 6, 100},
                              {rs_geometric(0.5), 8, 100},
                              {rs_geometric(1.0), 6, 100},
                              {rs_cutoff(2), 8, 100},
                              {rs_finite({1.0, 0.5, 0.25}), 8, 100}};
    bool ok = true;
    double worst_excess = -1e300;
    std::uint64_t seed = 15;
    for (const Probe& p : probes) {
        ToeplitzWitnessReport rep = toeplitz_lower_bound(p.s, p.N, p.trials, seed++);
        if (!rep.sound) ok = false;
        for (double w : rep.witnesses)
            worst_excess = std::max(worst_excess, w - rep.radial);
        worst_excess = std::max(worst_excess, rep.best - rep.radial);
    }
    report(15, "lower bound witnesses never exceed the cb norm", ok && worst_excess <= 1e-9,
           "worst excess " + num(worst_excess));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    criterion_15();
    if (failures == 0) {
        std::printf("all 15 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
