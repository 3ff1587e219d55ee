#include "focklab/fock.hpp"

#include <algorithm>
#include <cmath>

namespace focklab {

FockSpace make_fock(int d, int L, index_t budget) {
    if (d < 1) throw input_error("fock space needs d >= 1, got d = " + std::to_string(d));
    if (L < 0) throw input_error("fock space needs max_degree >= 0, got " + std::to_string(L));
    FockSpace fs;
    fs.d = d;
    fs.L = L;
    fs.off.resize(L + 2);
    fs.off[0] = 0;
    index_t block = 1;
    for (int n = 0; n <= L; ++n) {
        fs.off[n + 1] = fs.off[n] + block;
        if (fs.off[n + 1] > budget)
            throw input_error("fock space total_dim " + std::to_string(fs.off[n + 1]) +
                              "+ exceeds memory budget " + std::to_string(budget));
        if (n < L) {
            if (block > budget / d + 1) {
                // next block alone would blow the budget; form total for the message
                double approx = double(fs.off[n + 1]) + double(block) * d;
                throw input_error("fock space total_dim ~" + std::to_string((index_t)approx) +
                                  " exceeds memory budget " + std::to_string(budget));
            }
            block *= d;
        }
    }
    fs.total = fs.off[L + 1];
    return fs;
}

int degree_of(const FockSpace& fs, index_t idx) {
    if (idx < 0 || idx >= fs.total) throw input_error("basis index out of range");
    int lo = 0, hi = fs.L;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (fs.off[mid] <= idx) lo = mid; else hi = mid - 1;
    }
    return lo;
}

std::vector<int> word_of_index(const FockSpace& fs, index_t idx) {
    int n = degree_of(fs, idx);
    index_t r = idx - fs.off[n];
    std::vector<int> w(n);
    for (int k = n - 1; k >= 0; --k) {
        w[k] = int(r % fs.d);
        r /= fs.d;
    }
    return w;
}

index_t index_of_word(const FockSpace& fs, const std::vector<int>& w) {
    int n = int(w.size());
    if (n > fs.L) throw input_error("word length exceeds truncation");
    index_t r = 0;
    for (int k = 0; k < n; ++k) {
        if (w[k] < 0 || w[k] >= fs.d) throw input_error("letter out of range");
        r = r * fs.d + w[k];
    }
    return fs.off[n] + r;
}

double sv_norm(const SparseVec& v) {
    double s = 0.0;
    for (const auto& [k, a] : v) { (void)k; s += std::norm(a); }
    return std::sqrt(s);
}

void sv_axpy(SparseVec& dst, cplx a, const SparseVec& src) {
    if (a == cplx(0.0)) return;
    for (const auto& [k, x] : src) dst[k] += a * x;
}

SparseVec dense_to_sparse(const Vec& v, double drop) {
    SparseVec out;
    for (index_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > drop) out[i] = v[i];
    return out;
}

Vec sparse_to_dense(const SparseVec& v, index_t dim) {
    Vec out = Vec::Zero(dim);
    for (const auto& [k, a] : v) {
        if (k < 0 || k >= dim) throw input_error("sparse index out of range");
        out[k] = a;
    }
    return out;
}

SparseVec sv_recut(const SparseVec& v, const FockSpace& from, const FockSpace& to) {
    if (from.d != to.d) throw input_error("recut needs matching alphabet");
    SparseVec out;
    for (const auto& [k, a] : v) {
        int n = degree_of(from, k);
        if (n > to.L) continue;
        out[to.off[n] + (k - from.off[n])] = a;
    }
    return out;
}

Vec dense_recut(const Vec& v, const FockSpace& from, const FockSpace& to) {
    if (from.d != to.d) throw input_error("recut needs matching alphabet");
    Vec out = Vec::Zero(to.total);
    int top = std::min(from.L, to.L);
    for (int n = 0; n <= top; ++n)
        out.segment(to.off[n], to.degree_size(n)) = v.segment(from.off[n], from.degree_size(n));
    return out;
}

}  // namespace focklab
