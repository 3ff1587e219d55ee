#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace focklab {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using index_t = std::int64_t;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated full Fock space over C^d: scalars (vacuum) plus all tensor
// degrees 1..L. Basis order is graded lexicographic, vacuum at index 0,
// and within a degree words sort as base-d numerals, leading letter most
// significant. This order is fixed; serialized indices rely on it.
struct FockSpace {
    int d = 0;
    int L = 0;
    std::vector<index_t> off;  // off[n] = first index of degree n, off[L+1] = total
    index_t total = 0;

    index_t degree_size(int n) const { return off[n + 1] - off[n]; }
};

inline constexpr index_t kDefaultBudget = 200000000;

FockSpace make_fock(int d, int L, index_t budget = kDefaultBudget);

int degree_of(const FockSpace& fs, index_t idx);

// letters, leading letter first; empty word = vacuum
std::vector<int> word_of_index(const FockSpace& fs, index_t idx);
index_t index_of_word(const FockSpace& fs, const std::vector<int>& w);

// Sparse Fock vector keyed by basis index (ordered map keeps every
// accumulation order deterministic).
using SparseVec = std::map<index_t, cplx>;

double sv_norm(const SparseVec& v);
void sv_axpy(SparseVec& dst, cplx a, const SparseVec& src);
SparseVec dense_to_sparse(const Vec& v, double drop = 0.0);
Vec sparse_to_dense(const SparseVec& v, index_t dim);

// re-index a vector between truncations of the same alphabet
SparseVec sv_recut(const SparseVec& v, const FockSpace& from, const FockSpace& to);
Vec dense_recut(const Vec& v, const FockSpace& from, const FockSpace& to);

}  // namespace focklab
