#include "focklab/model.hpp"

#include <cmath>

namespace focklab {

RepModel assemble_model(int L, const RVec& a_diag, const std::vector<int>& swp,
                        const std::vector<PairBand>& bands, const std::vector<int>& trivial) {
    RepModel m;
    m.d = int(a_diag.size());
    m.L = L;
    m.fock = make_fock(m.d, L);
    m.a_diag = a_diag;
    m.swp = swp;
    m.bands = bands;
    m.trivial = trivial;

    m.kr = Mat::Zero(m.d, m.d);
    int col = 0;
    for (const auto& b : m.bands) {
        Vec xi = basis_vec(m.d, b.i_plus);
        Vec u1 = xi + involution(m, xi);
        Vec u2 = cplx(0.0, 1.0) * (involution(m, xi) - xi);
        m.kr.col(col++) = u1 / u1.norm();
        m.kr.col(col++) = u2 / u2.norm();
    }
    for (int j : m.trivial) m.kr.col(col++) = basis_vec(m.d, j);
    return m;
}

RepModel build_model(const RepSpec& spec) {
    if (spec.max_degree < 0) throw input_error("max_degree must be >= 0");
    int npairs = 0;
    for (const auto& p : spec.pairs) {
        if (!(p.lambda > 1.0))
            throw input_error("pair lambda must be > 1, got " + std::to_string(p.lambda));
        if (p.multiplicity < 1) throw input_error("pair multiplicity must be >= 1");
        npairs += p.multiplicity;
    }
    if (spec.trivial_dim < 0) throw input_error("trivial_dim must be >= 0");
    int d = 2 * npairs + spec.trivial_dim;
    if (d < 1) throw input_error("representation dimension must be >= 1");

    RVec a(d);
    std::vector<int> swp(d);
    std::vector<PairBand> bands;
    int idx = 0;
    for (const auto& p : spec.pairs)
        for (int r = 0; r < p.multiplicity; ++r) {
            bands.push_back({idx, idx + 1, p.lambda});
            a[idx] = p.lambda;
            a[idx + 1] = 1.0 / p.lambda;
            swp[idx] = idx + 1;
            swp[idx + 1] = idx;
            idx += 2;
        }
    std::vector<int> trivial;
    for (int r = 0; r < spec.trivial_dim; ++r) {
        a[idx] = 1.0;
        swp[idx] = idx;
        trivial.push_back(idx);
        ++idx;
    }
    return assemble_model(spec.max_degree, a, swp, bands, trivial);
}

Vec basis_vec(int d, int j) {
    Vec v = Vec::Zero(d);
    v[j] = 1.0;
    return v;
}

Vec involution(const RepModel& m, const Vec& xi) {
    Vec out = Vec::Zero(m.d);
    for (int j = 0; j < m.d; ++j)
        out[m.swp[j]] = std::conj(xi[j]) / std::sqrt(m.a_diag[j]);
    return out;
}

Eigen::MatrixXd involution_matrix(const RepModel& m) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m.d, m.d);
    for (int j = 0; j < m.d; ++j) M(m.swp[j], j) = 1.0 / std::sqrt(m.a_diag[j]);
    return M;
}

Op field_op(const RepModel& m, const Vec& xi) {
    return op_add({op_create(xi), op_annih(involution(m, xi))});
}

Op wick_op(const RepModel& m, const std::vector<Vec>& letters) {
    int n = int(letters.size());
    if (n > m.L)
        throw input_error("wick word length " + std::to_string(n) +
                          " exceeds truncation " + std::to_string(m.L));
    if (n == 0) return op_identity();
    std::vector<Op> terms;
    for (int k = 0; k <= n; ++k) {
        std::vector<Op> factors;
        for (int i = 0; i < k; ++i) factors.push_back(op_create(letters[i]));
        for (int i = k; i < n; ++i) factors.push_back(op_annih(involution(m, letters[i])));
        terms.push_back(factors.size() == 1 ? factors[0] : op_compose(std::move(factors)));
    }
    return op_add(std::move(terms));
}

Op wick_basis_op(const RepModel& m, const std::vector<int>& word) {
    std::vector<Vec> letters;
    letters.reserve(word.size());
    for (int l : word) letters.push_back(basis_vec(m.d, l));
    return wick_op(m, letters);
}

SparseVec op_to_symbol(const Op& x, const FockSpace& fs) {
    return sparse_apply_compressed(x, fs, SparseVec{{0, cplx(1.0)}});
}

Op symbol_to_op(const RepModel& m, const SparseVec& symbol, double drop) {
    std::vector<Op> terms;
    for (const auto& [idx, amp] : symbol) {
        if (std::abs(amp) <= drop) continue;
        terms.push_back(op_scale(amp, wick_basis_op(m, word_of_index(m.fock, idx))));
    }
    if (terms.empty()) return op_scale(0.0, op_identity());
    return op_add(std::move(terms));
}

Mat mod_unitary(const RepModel& m, double t) {
    Mat u = Mat::Zero(m.d, m.d);
    for (int j = 0; j < m.d; ++j)
        u(j, j) = std::exp(cplx(0.0, t * std::log(m.a_diag[j])));
    return u;
}

SparseVec modular_flow_symbol(const RepModel& m, double t, const SparseVec& symbol) {
    return sparse_apply(op_tensor_power(mod_unitary(m, t)), m.fock, symbol);
}

Op modular_conjugate(const RepModel& m, double t, const Op& x) {
    Op u = op_tensor_power(mod_unitary(m, t));
    Op uinv = op_tensor_power(mod_unitary(m, -t));
    return op_compose({u, x, uinv});
}

cplx two_point_closed(const RepModel& m, const Vec& xi, const Vec& eta) {
    return involution(m, xi).dot(eta);
}

cplx state_moment(const RepModel& m, const Vec& xi, int power) {
    if (power == 0) return 1.0;
    std::vector<Op> ws(power, field_op(m, xi));
    return vacuum_expectation(op_compose(std::move(ws)), m.fock);
}

MajfReport majf_check(int L, const std::vector<cplx>& alphas,
                      const std::vector<Vec>& es, const std::vector<Vec>& fvs) {
    size_t n = alphas.size();
    if (n == 0 || es.size() != n || fvs.size() != n)
        throw input_error("majf needs matching nonempty families");
    int d = int(es[0].size());
    auto gram_ok = [&](const std::vector<Vec>& v) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                cplx g = v[i].dot(v[j]);
                if (std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))) > 1e-10) return false;
            }
        return true;
    };
    if (!gram_ok(es) || !gram_ok(fvs))
        throw input_error("majf families must be orthonormal (gram check failed)");
    for (const auto& a : alphas)
        if (std::abs(a) > 1.0 + 1e-12) throw input_error("majf weights must satisfy |alpha| <= 1");

    FockSpace fs = make_fock(d, L);
    std::vector<Op> t1, t2;
    for (size_t i = 0; i < n; ++i) {
        t1.push_back(op_scale(alphas[i], op_compose({op_create(es[i]), op_annih(fvs[i])})));
        t2.push_back(op_scale(alphas[i], op_compose({op_create(es[i]), op_create(fvs[i])})));
    }
    double inv = 1.0 / double(n);
    MajfReport r;
    r.mixed = operator_norm(op_scale(inv, op_add(std::move(t1))), fs);
    r.raising = operator_norm(op_scale(inv, op_add(std::move(t2))), fs);
    r.bound_mixed = inv;
    r.bound_raising = 1.0 / std::sqrt(double(n));
    r.slack_mixed = r.bound_mixed - r.mixed.value;
    r.slack_raising = r.bound_raising - r.raising.value;
    return r;
}

OrthoSystem select_orthogonal_system(const RepModel& m, int n) {
    OrthoSystem s;
    for (const auto& b : m.bands) {
        if (int(s.e.size()) >= n) break;
        Vec e = basis_vec(m.d, b.i_plus);
        s.e.push_back(e);
        s.ebar.push_back(involution(m, e));
    }
    for (int j : m.trivial) {
        if (int(s.e.size()) >= n) break;
        Vec e = basis_vec(m.d, j);
        s.e.push_back(e);
        s.ebar.push_back(involution(m, e));
    }
    if (int(s.e.size()) < n)
        throw input_error("model provides only " + std::to_string(s.e.size()) +
                          " orthogonal generators, need " + std::to_string(n));
    return s;
}

}  // namespace focklab
