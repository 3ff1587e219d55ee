#include "focklab/quantize.hpp"

#include <algorithm>
#include <random>

namespace focklab {

double i_compatibility_defect(const RepModel& m, const Mat& t) {
    if (t.rows() != m.d || t.cols() != m.d) throw input_error("contraction shape mismatch");
    Mat mi = involution_matrix(m).cast<cplx>();
    Mat iti = mi * t.conjugate() * mi;
    return matrix_op_norm(iti - t);
}

ContractionSpec make_contraction(const RepModel& m, const Mat& t) {
    ContractionSpec spec;
    spec.T = t;
    spec.norm_bound = matrix_op_norm(t);
    if (spec.norm_bound > 1.0 + 1e-12) throw input_error("matrix is not a contraction");
    spec.i_defect = i_compatibility_defect(m, t);
    return spec;
}

Op first_quantization(const ContractionSpec& t) {
    if (t.norm_bound > 1.0 + 1e-12) throw input_error("matrix is not a contraction");
    return op_tensor_power(t.T);
}

SparseVec second_quantize_symbol(const RepModel& m, const ContractionSpec& t,
                                 const SparseVec& symbol) {
    if (t.i_defect > 1e-12) throw input_error("contraction does not commute with the involution");
    return sparse_apply(first_quantization(t), m.fock, symbol);
}

SparseVec fock_conjugation(const RepModel& m, const SparseVec& symbol) {
    SparseVec out;
    for (const auto& [idx, c] : symbol) {
        std::vector<int> w = word_of_index(m.fock, idx);
        double scale = 1.0;
        for (int& letter : w) {
            scale /= std::sqrt(m.a_diag[letter]);
            letter = m.swp[letter];
        }
        out[index_of_word(m.fock, w)] += scale * std::conj(c);
    }
    return out;
}

namespace {

SparseVec embed_word(const FockSpace& big, const Mat& basis, const std::vector<int>& w) {
    SparseVec cur{{0, cplx(1.0)}};
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = sparse_apply(op_create(basis.col(*it)), big, cur);
    return cur;
}

cplx sparse_dot(const SparseVec& a, const SparseVec& b) {
    cplx s(0.0);
    const SparseVec& small = a.size() <= b.size() ? a : b;
    for (const auto& [idx, av] : small) {
        auto ia = a.find(idx);
        auto ib = b.find(idx);
        if (ia != a.end() && ib != b.end()) s += std::conj(ia->second) * ib->second;
    }
    return s;
}

Op raw_monomial(const std::vector<Vec>& created, const std::vector<Vec>& annihilated) {
    Op x = op_identity();
    for (const Vec& h : annihilated) x = op_compose(x, op_annih(h));
    for (auto it = created.rbegin(); it != created.rend(); ++it)
        x = op_compose(op_create(*it), x);
    return x;
}

}  // namespace

FunctorReport toeplitz_functor_check(const RepModel& m, const Mat& t, int monomials,
                                     std::uint64_t seed, double tol) {
    double proj_defect = std::max(matrix_op_norm(t * t - t), matrix_op_norm(Mat(t.adjoint()) - t));
    double unit_defect = matrix_op_norm(Mat(t.adjoint() * t) - Mat::Identity(m.d, m.d));
    bool is_proj = proj_defect <= 1e-12;
    bool is_unit = unit_defect <= 1e-12;
    if (!is_proj && !is_unit) throw input_error("functor check needs a projection or a unitary");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto rand_vec = [&] {
        Vec v(m.d);
        for (int i = 0; i < m.d; ++i) v[i] = cplx(gauss(rng), gauss(rng));
        return v;
    };

    FunctorReport rep;
    int maxlen = std::min(m.L, 3);

    Mat basis;
    FockSpace sub = m.fock;
    if (is_proj && !is_unit) {
        Eigen::JacobiSVD<Mat> svd(t, Eigen::ComputeThinU);
        int k = 0;
        while (k < svd.singularValues().size() && svd.singularValues()[k] > 0.5) ++k;
        basis = svd.matrixU().leftCols(k);
        sub = make_fock(std::max(k, 1), m.L);
        if (k == 0) basis = Mat::Zero(m.d, 1);
    }

    for (int c = 0; c < monomials; ++c) {
        std::uniform_int_distribution<int> len(0, maxlen);
        int n = len(rng);
        std::uniform_int_distribution<int> split(0, n);
        int k = split(rng);
        std::vector<Vec> cre, ann;
        for (int i = 0; i < k; ++i) cre.push_back(rand_vec());
        for (int i = k; i < n; ++i) ann.push_back(rand_vec());
        Op x = raw_monomial(cre, ann);

        std::vector<Vec> tcre, tann;
        for (const Vec& h : cre) tcre.push_back(t * h);
        for (const Vec& h : ann) tann.push_back(t * h);

        double res = 0.0;
        if (is_unit) {
            Op g = op_tensor_power(t);
            Op gs = op_tensor_power(Mat(t.adjoint()));
            Mat lhs = materialize(op_compose(g, op_compose(x, gs)), m.fock);
            Mat rhs = materialize(raw_monomial(tcre, tann), m.fock);
            res = (lhs - rhs).cwiseAbs().maxCoeff();
        } else {
            // compress to the subspace Fock space and compare entrywise
            std::vector<SparseVec> emb(sub.total);
            for (index_t q = 0; q < sub.total; ++q)
                emb[q] = embed_word(m.fock, basis, word_of_index(sub, q));
            std::vector<Vec> kcre, kann;
            for (const Vec& h : tcre) kcre.push_back(basis.adjoint() * h);
            for (const Vec& h : tann) kann.push_back(basis.adjoint() * h);
            Mat rhs = materialize(raw_monomial(kcre, kann), sub);
            for (index_t q = 0; q < sub.total; ++q) {
                SparseVec img = sparse_apply_compressed(x, m.fock, emb[q]);
                for (index_t p = 0; p < sub.total; ++p) {
                    cplx lhs = sparse_dot(emb[p], img);
                    res = std::max(res, std::abs(lhs - rhs(p, q)));
                }
            }
        }
        rep.cases++;
        rep.max_residual = std::max(rep.max_residual, res);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

ContractionSpec band_approximant(const RepModel& m, const std::vector<Vec>& f, double eps) {
    if (!(eps > 0.0)) throw input_error("band approximant needs eps > 0");
    for (const Vec& v : f)
        if (v.size() != m.d) throw input_error("band approximant vector shape mismatch");

    // candidate blocks: one diagonal projection per couple, and the
    // projection onto the conjugation-invariant span of the projected data
    // inside the fixed block
    std::vector<Mat> cand;
    for (const PairBand& b : m.bands) {
        Mat p = Mat::Zero(m.d, m.d);
        p(b.i_plus, b.i_plus) = 1.0;
        p(b.i_minus, b.i_minus) = 1.0;
        cand.push_back(p);
    }
    if (!m.trivial.empty() && !f.empty()) {
        Mat cols(m.d, 2 * index_t(f.size()));
        cols.setZero();
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (int j : m.trivial) {
                cols(j, 2 * i) = f[i][j];
                cols(j, 2 * i + 1) = std::conj(f[i][j]);
            }
        }
        Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeThinU);
        double top = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
        int k = 0;
        while (k < svd.singularValues().size() && svd.singularValues()[k] > 1e-12 * std::max(top, 1.0)) ++k;
        if (k > 0) {
            Mat b = svd.matrixU().leftCols(k);
            cand.push_back(b * b.adjoint());
        }
    }

    std::vector<double> energy(cand.size(), 0.0);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (const Vec& v : f) energy[i] += (cand[i] * v).squaredNorm();
    std::vector<std::size_t> order(cand.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return energy[a] > energy[b]; });

    Mat t = Mat::Zero(m.d, m.d);
    auto satisfied = [&] {
        for (const Vec& v : f)
            if ((t * v - v).norm() > eps * v.norm()) return false;
        return true;
    };
    for (std::size_t i = 0; i < order.size() && !satisfied(); ++i) t += cand[order[i]];
    if (!satisfied()) t = Mat::Identity(m.d, m.d);
    return make_contraction(m, t);
}

ContractionSpec merged_band_contraction(const RepModel& m, const std::vector<int>& band_ids,
                                        double delta) {
    if (band_ids.empty()) throw input_error("merged band needs at least one couple");
    double lambda = 0.0;
    Mat t = Mat::Zero(m.d, m.d);
    for (int id : band_ids) {
        if (id < 0 || id >= int(m.bands.size())) throw input_error("merged band id out of range");
        const PairBand& b = m.bands[id];
        lambda = lambda == 0.0 ? b.lambda : std::min(lambda, b.lambda);
        t(b.i_plus, b.i_plus) = 1.0;
        t(b.i_minus, b.i_minus) = 1.0;
    }
    t *= 1.0 / (1.0 + 2.0 * delta / lambda);
    return make_contraction(m, t);
}

double contraction_rank(const Mat& t) {
    Eigen::JacobiSVD<Mat> svd(t);
    double top = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
    int k = 0;
    while (k < svd.singularValues().size() && svd.singularValues()[k] > 1e-9 * std::max(top, 1.0)) ++k;
    return double(k);
}

CmapElement cmap_map(const RepModel& m, const RadialSymbol& s, const ContractionSpec& t) {
    if (!s.finitely_supported()) throw input_error("net element needs a finitely supported symbol");
    if (t.i_defect > 1e-12) throw input_error("contraction does not commute with the involution");
    (void)m;
    CmapElement e;
    e.phi = s;
    e.t = t;
    double r = contraction_rank(t.T);
    for (int n = 0; n <= s.support_bound(); ++n)
        if (s.phi(n) != 0.0) e.rank += std::pow(r, double(n));
    if (s.support_bound() < 0) e.rank = 0.0;
    e.certificate = radial_norm(s);
    return e;
}

SparseVec cmap_apply(const RepModel& m, const CmapElement& e, const SparseVec& symbol) {
    SparseVec scaled = apply_radial_symbol(e.phi, m.fock, symbol);
    return sparse_apply(first_quantization(e.t), m.fock, scaled);
}

}  // namespace focklab
