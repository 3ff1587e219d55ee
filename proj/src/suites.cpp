#include "focklab/suites.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace focklab {

namespace {

RepModel pairs_model(std::vector<RepSpec::Pair> pairs, int trivial, int L) {
    RepSpec spec;
    spec.pairs = std::move(pairs);
    spec.trivial_dim = trivial;
    spec.max_degree = L;
    return build_model(spec);
}

struct Rng {
    std::mt19937_64 gen;
    std::normal_distribution<double> gauss{0.0, 1.0};

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    cplx scalar() { return cplx(gauss(gen), gauss(gen)); }
    Vec vec(int d) {
        Vec v(d);
        for (int i = 0; i < d; ++i) v[i] = scalar();
        return v;
    }
    Vec unit(int d) {
        Vec v = vec(d);
        return v / v.norm();
    }
    Mat unitary(int n) {
        Mat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = scalar();
        return Eigen::HouseholderQR<Mat>(g).householderQ();
    }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
};

void note(SuiteReport& rep, double residual, const std::string& what) {
    rep.cases++;
    if (residual > rep.max_residual) rep.max_residual = residual;
    if (residual > rep.tolerance) {
        std::ostringstream os;
        os << what << " residual " << residual;
        rep.diagnostics.push_back(os.str());
    }
}

SuiteReport suite_wick(std::uint64_t seed, double tol) {
    SuiteReport rep{"wick", 0, 0.0, tol > 0 ? tol : 1e-12, false, {}};
    std::vector<RepModel> models;
    models.push_back(pairs_model({}, 3, 6));
    models.push_back(pairs_model({{2.0, 1}}, 1, 6));
    models.push_back(pairs_model({{4.0, 1}}, 1, 6));
    Rng rng(seed ^ 0x7f1c6bull);

    for (int c = 0; c < 100; ++c) {
        const RepModel& m = models[c % models.size()];
        int n = rng.integer(1, 4);
        std::vector<int> w(n);
        for (int& letter : w) letter = rng.integer(0, m.d - 1);

        SparseVec sym = op_to_symbol(wick_basis_op(m, w), m.fock);
        sv_axpy(sym, cplx(-1.0), SparseVec{{index_of_word(m.fock, w), cplx(1.0)}});
        note(rep, sv_norm(sym), "wick symbol");

        std::vector<Vec> rest, rest2;
        for (int i = 1; i < n; ++i) rest.push_back(basis_vec(m.d, w[i]));
        for (int i = 2; i < n; ++i) rest2.push_back(basis_vec(m.d, w[i]));
        Op rhs = op_compose(field_op(m, basis_vec(m.d, w[0])), wick_op(m, rest));
        if (n >= 2) {
            cplx coef = involution(m, basis_vec(m.d, w[0])).dot(basis_vec(m.d, w[1]));
            rhs = op_sub(rhs, op_scale(coef, wick_op(m, rest2)));
        }
        Op diff = op_sub(wick_basis_op(m, w), rhs);
        double res = 0.0;
        for (index_t q = 0; q < m.fock.total; ++q) {
            SparseVec col = sparse_apply_compressed(diff, m.fock, SparseVec{{q, cplx(1.0)}});
            for (const auto& [idx, v] : col) res = std::max(res, std::abs(v));
        }
        note(rep, res, "wick recursion");
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_majf(std::uint64_t seed, double tol) {
    SuiteReport rep{"majf", 0, 0.0, tol > 0 ? tol : 1e-10, false, {}};
    Rng rng(seed ^ 0x3a11full);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            Mat qe = rng.unitary(n), qf = rng.unitary(n);
            std::vector<Vec> es, fs;
            std::vector<cplx> alphas;
            for (int i = 0; i < n; ++i) {
                es.push_back(qe.col(i));
                fs.push_back(qf.col(i));
                alphas.push_back(rng.uniform(0.0, 1.0) *
                                 std::exp(cplx(0.0, rng.uniform(0.0, 2.0 * std::numbers::pi))));
            }
            MajfReport r = majf_check(2, alphas, es, fs);
            note(rep, std::max({0.0, -r.slack_mixed, -r.slack_raising}), "majf slack");
        }
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_moments(std::uint64_t, double tol) {
    SuiteReport rep{"moments", 0, 0.0, tol > 0 ? tol : 1e-10, false, {}};
    const double catalan[5] = {1.0, 2.0, 5.0, 14.0, 42.0};
    std::vector<RepModel> models;
    models.push_back(pairs_model({}, 1, 10));
    models.push_back(pairs_model({{2.0, 1}}, 0, 10));
    for (const RepModel& m : models) {
        Vec xi = m.kr.col(0);
        for (int k = 1; k <= 5; ++k)
            note(rep, std::abs(state_moment(m, xi, 2 * k) - catalan[k - 1]), "even moment");
        for (int k = 0; k < 5; ++k)
            note(rep, std::abs(state_moment(m, xi, 2 * k + 1)), "odd moment");
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_twopoint(std::uint64_t seed, double tol) {
    SuiteReport rep{"twopoint", 0, 0.0, tol > 0 ? tol : 1e-12, false, {}};
    Rng rng(seed ^ 0x2b0a7ull);
    std::vector<RepModel> models;
    models.push_back(pairs_model({}, 2, 4));
    models.push_back(pairs_model({{2.0, 1}}, 1, 4));
    models.push_back(pairs_model({{4.0, 2}}, 0, 4));
    for (const RepModel& m : models) {
        for (int c = 0; c < 100; ++c) {
            Vec xi = rng.unit(m.d), eta = rng.unit(m.d);
            cplx direct = vacuum_expectation(
                op_compose(field_op(m, xi), field_op(m, eta)), m.fock);
            note(rep, std::abs(direct - two_point_closed(m, xi, eta)), "two point");
        }
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_modular(std::uint64_t seed, double tol) {
    SuiteReport rep{"modular", 0, 0.0, tol > 0 ? tol : 1e-10, false, {}};
    Rng rng(seed ^ 0x51c0deull);
    RepModel m = pairs_model({{2.0, 1}, {4.0, 1}}, 1, 4);
    for (int c = 0; c < 50; ++c) {
        double t = rng.uniform(-2.0, 2.0);
        int n = rng.integer(1, 3);
        std::vector<int> w(n);
        for (int& letter : w) letter = rng.integer(0, m.d - 1);
        Op x = wick_basis_op(m, w);

        cplx inv = vacuum_expectation(modular_conjugate(m, t, x), m.fock) -
                   vacuum_expectation(x, m.fock);
        note(rep, std::abs(inv), "state invariance");

        SparseVec lhs = op_to_symbol(modular_conjugate(m, t, x), m.fock);
        SparseVec ref = modular_flow_symbol(m, t, op_to_symbol(x, m.fock));
        sv_axpy(lhs, cplx(-1.0), ref);
        note(rep, sv_norm(lhs), "flow symbol");

        Vec zeta = rng.unit(m.d);
        SparseVec sym = op_to_symbol(modular_conjugate(m, t, field_op(m, zeta)), m.fock);
        Vec uz = mod_unitary(m, t) * zeta;
        for (int j = 0; j < m.d; ++j)
            sv_axpy(sym, cplx(-1.0), SparseVec{{m.fock.off[1] + j, uz[j]}});
        note(rep, sv_norm(sym), "degree one flow");
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_malleability(std::uint64_t seed, double tol) {
    SuiteReport rep{"malleability", 0, 0.0, tol > 0 ? tol : 1e-12, false, {}};
    Doubled dm = make_doubled(pairs_model({{2.0, 1}}, 1, 3));
    MalleabilityReport r = malleability_residuals(dm, 20, seed, rep.tolerance);
    rep.cases = r.cases;
    rep.max_residual = r.max_residual;
    if (!r.pass) {
        std::ostringstream os;
        os << "beta2 " << r.beta_involutive << " commutation " << r.commutation
           << " group " << r.group_law << " swap " << r.copy_swap
           << " flow " << r.flow_commutation;
        rep.diagnostics.push_back(os.str());
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_transversality(std::uint64_t seed, double tol) {
    SuiteReport rep{"transversality", 0, 0.0, tol > 0 ? tol : 1e-10, false, {}};
    Rng rng(seed ^ 0x7a05ull);
    Doubled dm = make_doubled(pairs_model({{2.0, 1}}, 1, 3));
    const FockSpace& fs = dm.dbl.fock;

    std::vector<index_t> first;
    for (index_t i = 0; i < fs.total; ++i) {
        std::vector<int> w = word_of_index(fs, i);
        bool ok = true;
        for (int letter : w) ok = ok && letter < dm.base.d;
        if (ok) first.push_back(i);
    }

    for (int c = 0; c < 1000; ++c) {
        Vec v = Vec::Zero(fs.total);
        for (index_t i : first) v[i] = rng.scalar();
        v /= v.norm();
        double s = rng.uniform(1e-3, 1.0);
        TransversalityReport t = transversality_residual(dm, v, s);
        note(rep, std::max(0.0, -t.slack), "transversality slack");
    }

    for (int c = 0; c < 50; ++c) {
        Vec xi = rng.unit(dm.base.d);
        Vec v = Vec::Zero(fs.total);
        for (int j = 0; j < dm.base.d; ++j) v[fs.off[1] + j] = xi[j];
        double s = rng.uniform(1e-3, 1.0);
        double cth = std::cos(std::numbers::pi * s / 2.0);
        double want = 4.0 * (1.0 - cth * cth);
        TransversalityReport t = transversality_residual(dm, v, s);
        note(rep, std::abs(t.lhs * t.lhs - want), "degree one lhs");
        note(rep, std::abs(t.rhs * t.rhs - want), "degree one rhs");
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_cas00(std::uint64_t, double tol) {
    SuiteReport rep{"cas00", 0, 0.0, tol > 0 ? tol : 1e-10, false, {}};
    for (int n : {2, 4, 9}) {
        RepModel m = pairs_model({{2.0, n}}, 0, 3);
        SnReport r = sn_identity_check(m, n, 1e-12);
        rep.cases += r.cases;
        note(rep, r.identity_residual, "sn identity");
        note(rep, std::max(0.0, r.norm_sum - r.total_bound), "sn norm bound");
        note(rep, std::max(0.0, r.part_lowering - 1.0 / std::sqrt(double(n))), "sn lowering");
        note(rep, std::max(0.0, r.part_mixed - 1.0 / double(n)), "sn mixed");
        note(rep, std::max(0.0, r.part_raising - 1.0 / std::sqrt(double(n))), "sn raising");
    }
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

SuiteReport suite_quantization(std::uint64_t seed, double tol) {
    SuiteReport rep{"quantization", 0, 0.0, tol > 0 ? tol : 1e-12, false, {}};
    Rng rng(seed ^ 0x9021ull);
    RepModel m = pairs_model({{2.0, 1}}, 1, 4);
    const FockSpace& fs = m.fock;

    auto rand_contraction = [&] {
        Mat g(m.d, m.d);
        for (int i = 0; i < m.d; ++i)
            for (int j = 0; j < m.d; ++j) g(i, j) = rng.scalar();
        return Mat(g / (matrix_op_norm(g) * (1.0 + rng.uniform(0.0, 1.0))));
    };

    for (int c = 0; c < 10; ++c) {
        Mat s = rand_contraction(), t = rand_contraction();
        Vec v = rng.unit(int(fs.total));
        Op gs = op_tensor_power(s), gt = op_tensor_power(t), gst = op_tensor_power(Mat(s * t));
        note(rep, (dense_apply(gs, fs, dense_apply(gt, fs, v)) - dense_apply(gst, fs, v)).norm(),
             "functoriality");
        note(rep, std::max(0.0, dense_apply(gt, fs, v).norm() - (1.0 + 1e-12)), "contractivity");
        Vec vac = Vec::Zero(fs.total);
        vac[0] = 1.0;
        note(rep, (dense_apply(gt, fs, vac) - vac).norm(), "unitality");
        note(rep, std::abs(dense_apply(gt, fs, v)[0] - v[0]), "state preservation");
    }

    // conjugation by quantized compatible unitaries moves wick words letterwise
    for (int c = 0; c < 6; ++c) {
        Mat u = mod_unitary(m, rng.uniform(-2.0, 2.0));
        int n = rng.integer(1, 3);
        std::vector<int> w(n);
        std::vector<Vec> mapped;
        for (int& letter : w) {
            letter = rng.integer(0, m.d - 1);
            mapped.push_back(u * basis_vec(m.d, letter));
        }
        Op lhs = op_compose({op_tensor_power(u), wick_basis_op(m, w),
                             op_tensor_power(Mat(u.adjoint()))});
        note(rep, (materialize(lhs, fs) - materialize(wick_op(m, mapped), fs))
                      .cwiseAbs().maxCoeff(),
             "wick conjugation");
    }

    FunctorReport fu = toeplitz_functor_check(m, rng.unitary(m.d), 12, seed ^ 0x77ull);
    rep.cases += fu.cases;
    note(rep, fu.max_residual, "unitary functor");
    Mat proj = Mat::Zero(m.d, m.d);
    proj(0, 0) = 1.0;
    proj(2, 2) = 1.0;
    FunctorReport fp = toeplitz_functor_check(m, proj, 12, seed ^ 0x78ull);
    rep.cases += fp.cases;
    note(rep, fp.max_residual, "projection functor");

    for (int c = 0; c < 20; ++c) {
        int nf = rng.integer(1, 3);
        std::vector<Vec> f;
        for (int i = 0; i < nf; ++i) f.push_back(rng.vec(m.d));
        double eps = rng.uniform(0.05, 1.5);
        ContractionSpec b = band_approximant(m, f, eps);
        note(rep, b.i_defect, "band i defect");
        note(rep, std::max(0.0, b.norm_bound - (1.0 + 1e-12)), "band norm");
        note(rep, std::max(0.0, contraction_rank(b.T) - double(m.d)), "band rank");
        double worst = 0.0;
        for (const Vec& x : f)
            worst = std::max(worst, (b.T * x - x).norm() - eps * x.norm());
        note(rep, std::max(0.0, worst), "band data residual");

        SparseVec sym = dense_to_sparse(rng.unit(int(fs.total)));
        SparseVec a = fock_conjugation(m, second_quantize_symbol(m, b, sym));
        SparseVec bb = second_quantize_symbol(m, b, fock_conjugation(m, sym));
        sv_axpy(a, cplx(-1.0), bb);
        note(rep, sv_norm(a), "conjugation propagation");
    }

    ContractionSpec id = make_contraction(m, Mat::Identity(m.d, m.d));
    CmapElement e0 = cmap_map(m, rs_finite({1.0}), id);
    note(rep, std::abs(e0.rank - 1.0), "vacuum net rank");
    SparseVec probe = dense_to_sparse(rng.unit(int(fs.total)));
    SparseVec got = cmap_apply(m, e0, probe);
    SparseVec want{{0, sparse_to_dense(probe, fs.total)[0]}};
    sv_axpy(got, cplx(-1.0), want);
    note(rep, sv_norm(got), "vacuum net action");

    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"wick", "majf", "moments", "twopoint", "modular",
            "malleability", "transversality", "cas00", "quantization"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, double tol) {
    if (name == "wick") return suite_wick(seed, tol);
    if (name == "majf") return suite_majf(seed, tol);
    if (name == "moments") return suite_moments(seed, tol);
    if (name == "twopoint") return suite_twopoint(seed, tol);
    if (name == "modular") return suite_modular(seed, tol);
    if (name == "malleability") return suite_malleability(seed, tol);
    if (name == "transversality") return suite_transversality(seed, tol);
    if (name == "cas00") return suite_cas00(seed, tol);
    if (name == "quantization") return suite_quantization(seed, tol);
    throw input_error("unknown suite \"" + name + "\"");
}

}  // namespace focklab
