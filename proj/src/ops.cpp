#include "focklab/ops.hpp"

#include <algorithm>

#include "focklab/kernels.hpp"

namespace focklab {

namespace {

Op mk(OpNode n) { return std::make_shared<const OpNode>(std::move(n)); }

}  // namespace

Op op_identity() { return mk(OpNode{}); }

Op op_create(const Vec& xi) {
    OpNode n;
    n.kind = OpNode::Kind::Create;
    n.vec = xi;
    return mk(std::move(n));
}

Op op_annih(const Vec& xi) {
    OpNode n;
    n.kind = OpNode::Kind::Annih;
    n.vec = xi;
    return mk(std::move(n));
}

Op op_tensor_power(const Mat& T) {
    if (T.rows() != T.cols()) throw input_error("tensor power needs a square matrix");
    OpNode n;
    n.kind = OpNode::Kind::TensorPower;
    n.mat = T;
    return mk(std::move(n));
}

Op op_scale(cplx c, Op x) {
    OpNode n;
    n.kind = OpNode::Kind::Scale;
    n.coef = c;
    n.kids = {std::move(x)};
    return mk(std::move(n));
}

Op op_add(std::vector<Op> xs) {
    if (xs.empty()) throw input_error("empty operator sum");
    if (xs.size() == 1) return xs[0];
    OpNode n;
    n.kind = OpNode::Kind::Add;
    n.kids = std::move(xs);
    return mk(std::move(n));
}

Op op_compose(std::vector<Op> xs) {
    if (xs.empty()) throw input_error("empty operator product");
    if (xs.size() == 1) return xs[0];
    OpNode n;
    n.kind = OpNode::Kind::Compose;
    n.kids = std::move(xs);
    return mk(std::move(n));
}

Op op_tensor_pair(Op a, Op b) {
    OpNode n;
    n.kind = OpNode::Kind::TensorPair;
    n.kids = {std::move(a), std::move(b)};
    return mk(std::move(n));
}

Op op_sub(Op a, Op b) { return op_add({std::move(a), op_scale(-1.0, std::move(b))}); }

Op op_adjoint(const Op& x) {
    switch (x->kind) {
        case OpNode::Kind::Ident:
            return x;
        case OpNode::Kind::Create:
            return op_annih(x->vec);
        case OpNode::Kind::Annih:
            return op_create(x->vec);
        case OpNode::Kind::TensorPower:
            return op_tensor_power(x->mat.adjoint());
        case OpNode::Kind::Scale:
            return op_scale(std::conj(x->coef), op_adjoint(x->kids[0]));
        case OpNode::Kind::Add: {
            std::vector<Op> kids;
            kids.reserve(x->kids.size());
            for (const auto& k : x->kids) kids.push_back(op_adjoint(k));
            return op_add(std::move(kids));
        }
        case OpNode::Kind::Compose: {
            std::vector<Op> kids;
            kids.reserve(x->kids.size());
            for (auto it = x->kids.rbegin(); it != x->kids.rend(); ++it)
                kids.push_back(op_adjoint(*it));
            return op_compose(std::move(kids));
        }
        case OpNode::Kind::TensorPair:
            return op_tensor_pair(op_adjoint(x->kids[0]), op_adjoint(x->kids[1]));
    }
    throw input_error("bad op node");
}

int op_arity(const Op& x) {
    switch (x->kind) {
        case OpNode::Kind::TensorPair:
            return 2;
        case OpNode::Kind::Scale:
        case OpNode::Kind::Add:
        case OpNode::Kind::Compose: {
            int a = op_arity(x->kids[0]);
            for (const auto& k : x->kids)
                if (op_arity(k) != a) throw input_error("mixed tensor arity in expression");
            return a;
        }
        default:
            return 1;
    }
}

namespace {

Profile fold_compose(const Profile& outer, const Profile& inner) {
    // inner acts first
    Profile p;
    p.peak = std::max(inner.peak, inner.net_hi + outer.peak);
    p.net_lo = inner.net_lo + outer.net_lo;
    p.net_hi = inner.net_hi + outer.net_hi;
    return p;
}

std::vector<Profile> profiles(const Op& x, int arity) {
    std::vector<Profile> zero(arity);
    switch (x->kind) {
        case OpNode::Kind::Ident:
        case OpNode::Kind::TensorPower:
            return zero;
        case OpNode::Kind::Create:
            return {Profile{1, 1, 1}};
        case OpNode::Kind::Annih:
            return {Profile{-1, -1, 0}};
        case OpNode::Kind::Scale:
            return profiles(x->kids[0], arity);
        case OpNode::Kind::Add: {
            auto acc = profiles(x->kids[0], arity);
            for (size_t i = 1; i < x->kids.size(); ++i) {
                auto p = profiles(x->kids[i], arity);
                for (int f = 0; f < arity; ++f) {
                    acc[f].net_lo = std::min(acc[f].net_lo, p[f].net_lo);
                    acc[f].net_hi = std::max(acc[f].net_hi, p[f].net_hi);
                    acc[f].peak = std::max(acc[f].peak, p[f].peak);
                }
            }
            return acc;
        }
        case OpNode::Kind::Compose: {
            auto acc = std::vector<Profile>(arity);
            for (auto it = x->kids.rbegin(); it != x->kids.rend(); ++it) {
                auto p = profiles(*it, arity);
                for (int f = 0; f < arity; ++f) acc[f] = fold_compose(p[f], acc[f]);
            }
            return acc;
        }
        case OpNode::Kind::TensorPair: {
            auto a = profiles(x->kids[0], 1);
            auto b = profiles(x->kids[1], 1);
            return {a[0], b[0]};
        }
    }
    throw input_error("bad op node");
}

}  // namespace

Profile op_profile(const Op& x) { return profiles(x, op_arity(x))[0]; }

std::pair<Profile, Profile> op_profile2(const Op& x) {
    auto p = profiles(x, 2);
    return {p[0], p[1]};
}

Vec dense_apply(const Op& x, const FockSpace& fs, const Vec& v) {
    switch (x->kind) {
        case OpNode::Kind::Ident:
            return v;
        case OpNode::Kind::Create: {
            Vec out;
            kern_create(fs, x->vec, v, out);
            return out;
        }
        case OpNode::Kind::Annih: {
            Vec out;
            kern_annih(fs, x->vec, v, out);
            return out;
        }
        case OpNode::Kind::TensorPower: {
            if (x->mat.rows() != fs.d) throw input_error("tensor power dimension mismatch");
            Vec out;
            kern_tensor_power(fs, x->mat, v, out);
            return out;
        }
        case OpNode::Kind::Scale:
            return x->coef * dense_apply(x->kids[0], fs, v);
        case OpNode::Kind::Add: {
            Vec out = dense_apply(x->kids[0], fs, v);
            for (size_t i = 1; i < x->kids.size(); ++i) out += dense_apply(x->kids[i], fs, v);
            return out;
        }
        case OpNode::Kind::Compose: {
            Vec cur = v;
            for (auto it = x->kids.rbegin(); it != x->kids.rend(); ++it)
                cur = dense_apply(*it, fs, cur);
            return cur;
        }
        case OpNode::Kind::TensorPair:
            throw input_error("tensor pair has no single-space dense action");
    }
    throw input_error("bad op node");
}

namespace {

void sparse_tensor_power_word(const FockSpace& fs, const Mat& T,
                              const std::vector<int>& w, cplx amp, int pos,
                              index_t numeral, cplx partial, SparseVec& out) {
    int n = int(w.size());
    if (pos == n) {
        out[fs.off[n] + numeral] += amp * partial;
        return;
    }
    for (int i = 0; i < fs.d; ++i) {
        cplx t = T(i, w[pos]);
        if (t == cplx(0.0)) continue;
        sparse_tensor_power_word(fs, T, w, amp, pos + 1, numeral * fs.d + i, partial * t, out);
    }
}

}  // namespace

SparseVec sparse_apply(const Op& x, const FockSpace& fs, const SparseVec& v) {
    SparseVec out;
    switch (x->kind) {
        case OpNode::Kind::Ident:
            return v;
        case OpNode::Kind::Create: {
            for (const auto& [idx, amp] : v) {
                int n = degree_of(fs, idx);
                if (n + 1 > fs.L) continue;
                index_t r = idx - fs.off[n];
                index_t blk = fs.degree_size(n);
                for (int j = 0; j < fs.d; ++j) {
                    if (x->vec[j] == cplx(0.0)) continue;
                    out[fs.off[n + 1] + j * blk + r] += x->vec[j] * amp;
                }
            }
            return out;
        }
        case OpNode::Kind::Annih: {
            for (const auto& [idx, amp] : v) {
                int n = degree_of(fs, idx);
                if (n == 0) continue;
                index_t r = idx - fs.off[n];
                index_t blk = fs.degree_size(n - 1);
                int j = int(r / blk);
                out[fs.off[n - 1] + r % blk] += std::conj(x->vec[j]) * amp;
            }
            return out;
        }
        case OpNode::Kind::TensorPower: {
            if (x->mat.rows() != fs.d) throw input_error("tensor power dimension mismatch");
            bool diag = x->mat.isDiagonal(0.0);
            for (const auto& [idx, amp] : v) {
                auto w = word_of_index(fs, idx);
                if (diag) {
                    cplx p = amp;
                    for (int l : w) p *= x->mat(l, l);
                    out[idx] += p;
                } else {
                    sparse_tensor_power_word(fs, x->mat, w, amp, 0, 0, cplx(1.0), out);
                }
            }
            return out;
        }
        case OpNode::Kind::Scale: {
            out = sparse_apply(x->kids[0], fs, v);
            for (auto& [k, a] : out) { (void)k; a *= x->coef; }
            return out;
        }
        case OpNode::Kind::Add: {
            for (const auto& kid : x->kids) sv_axpy(out, 1.0, sparse_apply(kid, fs, v));
            return out;
        }
        case OpNode::Kind::Compose: {
            SparseVec cur = v;
            for (auto it = x->kids.rbegin(); it != x->kids.rend(); ++it)
                cur = sparse_apply(*it, fs, cur);
            return cur;
        }
        case OpNode::Kind::TensorPair:
            throw input_error("tensor pair has no single-space action");
    }
    throw input_error("bad op node");
}

SparseVec sparse_apply2(const Op& x, const FockSpace& f1, const FockSpace& f2,
                        const SparseVec& v) {
    SparseVec out;
    switch (x->kind) {
        case OpNode::Kind::Ident:
            return v;
        case OpNode::Kind::TensorPair: {
            for (const auto& [key, amp] : v) {
                index_t i1 = key / f2.total;
                index_t i2 = key % f2.total;
                SparseVec a = sparse_apply(x->kids[0], f1, SparseVec{{i1, cplx(1.0)}});
                SparseVec b = sparse_apply(x->kids[1], f2, SparseVec{{i2, cplx(1.0)}});
                for (const auto& [k1, v1] : a)
                    for (const auto& [k2, v2] : b)
                        out[k1 * f2.total + k2] += amp * v1 * v2;
            }
            return out;
        }
        case OpNode::Kind::Scale: {
            out = sparse_apply2(x->kids[0], f1, f2, v);
            for (auto& [k, a] : out) { (void)k; a *= x->coef; }
            return out;
        }
        case OpNode::Kind::Add: {
            for (const auto& kid : x->kids) sv_axpy(out, 1.0, sparse_apply2(kid, f1, f2, v));
            return out;
        }
        case OpNode::Kind::Compose: {
            SparseVec cur = v;
            for (auto it = x->kids.rbegin(); it != x->kids.rend(); ++it)
                cur = sparse_apply2(*it, f1, f2, cur);
            return cur;
        }
        default:
            throw input_error("single-space leaf used on a tensor pair space");
    }
}

Vec apply_compressed(const Op& x, const FockSpace& fs, const Vec& v) {
    int peak = op_profile(x).peak;
    if (peak == 0) return dense_apply(x, fs, v);
    FockSpace big = make_fock(fs.d, fs.L + peak);
    Vec w = dense_recut(v, fs, big);
    Vec r = dense_apply(x, big, w);
    return dense_recut(r, big, fs);
}

SparseVec sparse_apply_compressed(const Op& x, const FockSpace& fs, const SparseVec& v) {
    int peak = op_profile(x).peak;
    if (peak == 0) return sparse_apply(x, fs, v);
    FockSpace big = make_fock(fs.d, fs.L + peak);
    SparseVec r = sparse_apply(x, big, sv_recut(v, fs, big));
    return sv_recut(r, big, fs);
}

SparseVec sparse_apply_compressed2(const Op& x, const FockSpace& f1, const FockSpace& f2,
                                   const SparseVec& v) {
    auto [p1, p2] = op_profile2(x);
    FockSpace b1 = make_fock(f1.d, f1.L + p1.peak);
    FockSpace b2 = make_fock(f2.d, f2.L + p2.peak);
    SparseVec in;
    for (const auto& [key, amp] : v) {
        index_t i1 = key / f2.total;
        index_t i2 = key % f2.total;
        int n1 = degree_of(f1, i1);
        int n2 = degree_of(f2, i2);
        in[(b1.off[n1] + (i1 - f1.off[n1])) * b2.total + b2.off[n2] + (i2 - f2.off[n2])] = amp;
    }
    SparseVec r = sparse_apply2(x, b1, b2, in);
    SparseVec out;
    for (const auto& [key, amp] : r) {
        index_t i1 = key / b2.total;
        index_t i2 = key % b2.total;
        int n1 = degree_of(b1, i1);
        int n2 = degree_of(b2, i2);
        if (n1 > f1.L || n2 > f2.L) continue;
        out[(f1.off[n1] + (i1 - b1.off[n1])) * f2.total + f2.off[n2] + (i2 - b2.off[n2])] += amp;
    }
    return out;
}

Mat materialize(const Op& x, const FockSpace& fs) {
    int peak = op_profile(x).peak;
    FockSpace big = peak == 0 ? fs : make_fock(fs.d, fs.L + peak);
    Mat m = Mat::Zero(fs.total, fs.total);
#pragma omp parallel for schedule(dynamic, 16) if (parallel_kernels())
    for (index_t c = 0; c < fs.total; ++c) {
        int n = degree_of(fs, c);
        index_t cbig = big.off[n] + (c - fs.off[n]);
        SparseVec col = sparse_apply(x, big, SparseVec{{cbig, cplx(1.0)}});
        for (const auto& [k, a] : col) {
            int m2 = degree_of(big, k);
            if (m2 > fs.L) continue;
            m(fs.off[m2] + (k - big.off[m2]), c) = a;
        }
    }
    return m;
}

cplx vacuum_expectation(const Op& x, const FockSpace& fs) {
    SparseVec r = sparse_apply_compressed(x, fs, SparseVec{{0, cplx(1.0)}});
    auto it = r.find(0);
    return it == r.end() ? cplx(0.0) : it->second;
}

}  // namespace focklab
