#pragma once

#include <memory>

#include "focklab/fock.hpp"

namespace focklab {

// Operator expressions. An Op is a space-independent description; it is
// instantiated on a concrete truncation only when applied. Products of
// degree-raising factors are evaluated with headroom: the expression runs
// on an enlarged truncation that keeps every intermediate exact, and the
// result is compressed back, so every reported quantity is the compression
// P_L (exact operator) P_L of the untruncated composite.

struct OpNode;
using Op = std::shared_ptr<const OpNode>;

struct OpNode {
    enum class Kind { Ident, Create, Annih, TensorPower, Scale, Add, Compose, TensorPair };
    Kind kind = Kind::Ident;
    Vec vec;          // Create: ell(vec); Annih: ell(vec)*
    Mat mat;          // TensorPower: 1 (+) T (+) T tensor T (+) ...
    cplx coef{1.0};   // Scale
    std::vector<Op> kids;  // Scale: 1; Add: n; Compose: applied right to left; TensorPair: 2
};

Op op_identity();
Op op_create(const Vec& xi);
Op op_annih(const Vec& xi);
Op op_tensor_power(const Mat& T);
Op op_scale(cplx c, Op x);
Op op_add(std::vector<Op> xs);
Op op_compose(std::vector<Op> xs);      // xs[0] * xs[1] * ... (rightmost applied first)
inline Op op_compose(Op a, Op b) { return op_compose(std::vector<Op>{std::move(a), std::move(b)}); }
Op op_tensor_pair(Op a, Op b);          // a acting on factor 1, b on factor 2
Op op_adjoint(const Op& x);             // structural, pushed to the leaves
Op op_sub(Op a, Op b);

// degree bookkeeping for headroom evaluation
struct Profile {
    int net_lo = 0;   // least possible net degree change
    int net_hi = 0;   // greatest possible net degree change
    int peak = 0;     // max intermediate raise above the input degree
};
Profile op_profile(const Op& x);                    // single-space expressions
std::pair<Profile, Profile> op_profile2(const Op& x);  // tensor-pair expressions

int op_arity(const Op& x);  // 1 or 2 tensor factors

// raw evaluation on a fixed truncation (creation discards overflow)
Vec dense_apply(const Op& x, const FockSpace& fs, const Vec& v);
SparseVec sparse_apply(const Op& x, const FockSpace& fs, const SparseVec& v);
SparseVec sparse_apply2(const Op& x, const FockSpace& f1, const FockSpace& f2,
                        const SparseVec& v);  // key = i1 * f2.total + i2

// headroom evaluation: exact on inputs of degree <= L, compressed back
Vec apply_compressed(const Op& x, const FockSpace& fs, const Vec& v);
SparseVec sparse_apply_compressed(const Op& x, const FockSpace& fs, const SparseVec& v);
SparseVec sparse_apply_compressed2(const Op& x, const FockSpace& f1, const FockSpace& f2,
                                   const SparseVec& v);

// dense matrix of the compressed operator, columns built independently
Mat materialize(const Op& x, const FockSpace& fs);

cplx vacuum_expectation(const Op& x, const FockSpace& fs);

}  // namespace focklab
