#include "focklab/deform.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace focklab {

Doubled make_doubled(const RepModel& base) {
    int d = base.d;
    RVec a2(2 * d);
    a2 << base.a_diag, base.a_diag;
    std::vector<int> swp2(2 * d);
    for (int j = 0; j < d; ++j) {
        swp2[j] = base.swp[j];
        swp2[d + j] = d + base.swp[j];
    }
    std::vector<PairBand> bands2 = base.bands;
    for (const PairBand& b : base.bands)
        bands2.push_back({b.i_plus + d, b.i_minus + d, b.lambda});
    std::vector<int> trivial2 = base.trivial;
    for (int j : base.trivial) trivial2.push_back(j + d);
    return Doubled{base, assemble_model(base.L, a2, swp2, bands2, trivial2)};
}

Vec iota1(const Doubled& dm, const Vec& xi) {
    Vec out = Vec::Zero(2 * dm.base.d);
    out.head(dm.base.d) = xi;
    return out;
}

Vec iota2(const Doubled& dm, const Vec& xi) {
    Vec out = Vec::Zero(2 * dm.base.d);
    out.tail(dm.base.d) = xi;
    return out;
}

Mat rot_mat(const Doubled& dm, double s) {
    int d = dm.base.d;
    double c = std::cos(std::numbers::pi * s / 2.0);
    double sn = std::sin(std::numbers::pi * s / 2.0);
    Mat v = Mat::Zero(2 * d, 2 * d);
    v.topLeftCorner(d, d) = c * Mat::Identity(d, d);
    v.topRightCorner(d, d) = -sn * Mat::Identity(d, d);
    v.bottomLeftCorner(d, d) = sn * Mat::Identity(d, d);
    v.bottomRightCorner(d, d) = c * Mat::Identity(d, d);
    return v;
}

Mat beta_mat(const Doubled& dm) {
    int d = dm.base.d;
    Mat v = Mat::Identity(2 * d, 2 * d);
    v.bottomRightCorner(d, d) = -Mat::Identity(d, d);
    return v;
}

Op alpha_op(const Doubled& dm, double s) { return op_tensor_power(rot_mat(dm, s)); }
Op beta_op(const Doubled& dm) { return op_tensor_power(beta_mat(dm)); }

SparseVec alpha_symbol(const Doubled& dm, double s, const SparseVec& symbol) {
    return sparse_apply(alpha_op(dm, s), dm.dbl.fock, symbol);
}

SparseVec beta_symbol(const Doubled& dm, const SparseVec& symbol) {
    return sparse_apply(beta_op(dm), dm.dbl.fock, symbol);
}

namespace {

bool first_copy_word(const Doubled& dm, index_t idx) {
    std::vector<int> w = word_of_index(dm.dbl.fock, idx);
    for (int letter : w)
        if (letter >= dm.base.d) return false;
    return true;
}

}  // namespace

SparseVec project_first_copy(const Doubled& dm, const SparseVec& symbol) {
    SparseVec out;
    for (const auto& [idx, c] : symbol)
        if (first_copy_word(dm, idx)) out[idx] = c;
    return out;
}

Vec project_first_copy(const Doubled& dm, const Vec& symbol) {
    Vec out = Vec::Zero(symbol.size());
    for (index_t i = 0; i < symbol.size(); ++i)
        if (symbol[i] != cplx(0.0) && first_copy_word(dm, i)) out[i] = symbol[i];
    return out;
}

MalleabilityReport malleability_residuals(const Doubled& dm, int samples,
                                          std::uint64_t seed, double tol) {
    const FockSpace& fs = dm.dbl.fock;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    auto rand_state = [&] {
        Vec v(fs.total);
        for (index_t i = 0; i < fs.total; ++i) v[i] = cplx(gauss(rng), gauss(rng));
        v /= v.norm();
        return v;
    };

    MalleabilityReport rep;
    for (int c = 0; c < samples; ++c) {
        Vec v = rand_state();
        double s = uni(rng), t = uni(rng);
        Op as = alpha_op(dm, s), ams = alpha_op(dm, -s), at = alpha_op(dm, t);
        Op ast = alpha_op(dm, s + t), b = beta_op(dm);

        Vec bv = dense_apply(b, fs, v);
        rep.beta_involutive = std::max(rep.beta_involutive,
                                       (dense_apply(b, fs, bv) - v).norm());
        rep.commutation = std::max(rep.commutation,
                                   (dense_apply(b, fs, dense_apply(as, fs, v)) -
                                    dense_apply(ams, fs, bv)).norm());
        rep.group_law = std::max(rep.group_law,
                                 (dense_apply(as, fs, dense_apply(at, fs, v)) -
                                  dense_apply(ast, fs, v)).norm());

        Op flow = op_tensor_power(mod_unitary(dm.dbl, t));
        rep.flow_commutation = std::max(rep.flow_commutation,
                                        (dense_apply(as, fs, dense_apply(flow, fs, v)) -
                                         dense_apply(flow, fs, dense_apply(as, fs, v))).norm());

        std::uniform_int_distribution<int> len(0, std::min(dm.base.L, 3));
        std::uniform_int_distribution<int> letter(0, dm.base.d - 1);
        int n = len(rng);
        std::vector<int> w1(n), w2(n);
        for (int i = 0; i < n; ++i) {
            w1[i] = letter(rng);
            w2[i] = w1[i] + dm.base.d;
        }
        Vec e1 = Vec::Zero(fs.total);
        e1[index_of_word(fs, w1)] = 1.0;
        Vec e2 = Vec::Zero(fs.total);
        e2[index_of_word(fs, w2)] = 1.0;
        rep.copy_swap = std::max(rep.copy_swap,
                                 (dense_apply(alpha_op(dm, 1.0), fs, e1) - e2).norm());
        rep.cases++;
    }
    rep.max_residual = std::max({rep.beta_involutive, rep.commutation, rep.group_law,
                                 rep.copy_swap, rep.flow_commutation});
    rep.pass = rep.max_residual <= tol;
    return rep;
}

TransversalityReport transversality_residual(const Doubled& dm, const Vec& symbol,
                                             double s) {
    const FockSpace& fs = dm.dbl.fock;
    if (symbol.size() != fs.total) throw input_error("symbol shape mismatch");
    for (index_t i = 0; i < fs.total; ++i)
        if (symbol[i] != cplx(0.0) && !first_copy_word(dm, i))
            throw input_error("transversality needs a first-copy symbol");

    Vec a = dense_apply(alpha_op(dm, s), fs, symbol);
    Vec b = dense_apply(alpha_op(dm, 2.0 * s), fs, symbol);
    TransversalityReport rep;
    rep.lhs = 2.0 * (a - project_first_copy(dm, a)).norm();
    rep.rhs = (symbol - b).norm();
    rep.slack = rep.lhs - rep.rhs;
    return rep;
}

SnReport sn_identity_check(const RepModel& m, int n, double tol) {
    if (m.L < 3) throw input_error("identity check needs degree headroom >= 2");
    OrthoSystem sys = select_orthogonal_system(m, n);

    SnReport rep;
    rep.n = n;

    // (a) exact identity on the tensor square, compressed evaluation
    std::vector<Op> terms, eterms;
    for (int i = 0; i < n; ++i) {
        terms.push_back(op_tensor_pair(op_create(sys.e[i]), field_op(m, sys.e[i])));
        eterms.push_back(op_tensor_pair(op_identity(),
                                        wick_op(m, {sys.ebar[i], sys.e[i]})));
    }
    Op s = op_scale(1.0 / std::sqrt(double(n)), op_add(terms));
    Op x = op_compose(op_adjoint(s), s);
    Op e = op_scale(1.0 / double(n), op_add(eterms));

    const FockSpace& f = m.fock;
    std::vector<index_t> lows;
    for (index_t i = 0; i <= index_t(m.d); ++i) lows.push_back(i);  // vacuum + degree 1
    for (index_t i1 : lows)
        for (index_t i2 : lows) {
            SparseVec v{{i1 * f.total + i2, cplx(1.0)}};
            SparseVec r = sparse_apply_compressed2(x, f, f, v);
            sv_axpy(r, cplx(-1.0), v);
            SparseVec ev = sparse_apply_compressed2(e, f, f, v);
            sv_axpy(r, cplx(-1.0), ev);
            rep.identity_residual = std::max(rep.identity_residual, sv_norm(r));
            rep.cases++;
        }

    // (b) norm bound through the three monomial groups of the Wick expansion
    FockSpace fb = make_fock(m.d, 2);
    std::vector<Op> low, mix, high, all;
    for (int i = 0; i < n; ++i) {
        Op a = op_compose(op_annih(sys.e[i]), op_annih(sys.ebar[i]));
        Op b = op_compose(op_create(sys.ebar[i]), op_annih(sys.ebar[i]));
        Op c = op_compose(op_create(sys.ebar[i]), op_create(sys.e[i]));
        low.push_back(a);
        mix.push_back(b);
        high.push_back(c);
        all.push_back(op_add({a, b, c}));
    }
    cplx inv(1.0 / double(n));
    rep.part_lowering = operator_norm(op_scale(inv, op_add(low)), fb).value;
    rep.part_mixed = operator_norm(op_scale(inv, op_add(mix)), fb).value;
    rep.part_raising = operator_norm(op_scale(inv, op_add(high)), fb).value;
    rep.norm_sum = operator_norm(op_scale(inv, op_add(all)), fb).value;
    rep.total_bound = 3.0 / std::sqrt(double(n));

    double rn = 1.0 / std::sqrt(double(n));
    bool parts_ok = rep.part_lowering <= rn + 1e-10 &&
                    rep.part_mixed <= 1.0 / double(n) + 1e-10 &&
                    rep.part_raising <= rn + 1e-10;
    rep.pass = rep.identity_residual <= tol && parts_ok &&
               rep.norm_sum <= rep.total_bound + 1e-10;
    return rep;
}

}  // namespace focklab
