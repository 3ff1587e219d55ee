#pragma once

#include "focklab/norms.hpp"
#include "focklab/ops.hpp"

namespace focklab {

// Generator data for the almost periodic representation: A is diagonal with
// entries (lambda, 1/lambda) per pair couple and 1 on trivial indices, J is
// coordinate conjugation composed with the couple swap, I = J A^{-1/2}.

struct RepSpec {
    struct Pair {
        double lambda = 2.0;
        int multiplicity = 1;
    };
    std::vector<Pair> pairs;
    int trivial_dim = 0;
    int max_degree = 0;
};

struct PairBand {
    int i_plus = 0;   // A eigenvalue lambda
    int i_minus = 0;  // A eigenvalue 1/lambda
    double lambda = 1.0;
};

struct RepModel {
    int d = 0;
    int L = 0;
    FockSpace fock;
    RVec a_diag;
    std::vector<int> swp;       // couple swap, fixed points on trivial indices
    std::vector<PairBand> bands;
    std::vector<int> trivial;
    Mat kr;                     // d columns spanning fix(I), unit in H
};

RepModel build_model(const RepSpec& spec);
RepModel assemble_model(int L, const RVec& a_diag, const std::vector<int>& swp,
                        const std::vector<PairBand>& bands, const std::vector<int>& trivial);

Vec involution(const RepModel& m, const Vec& xi);   // I, conjugate linear
Eigen::MatrixXd involution_matrix(const RepModel& m);  // M with I(xi) = M conj(xi)
Vec basis_vec(int d, int j);

Op field_op(const RepModel& m, const Vec& xi);                    // W(xi)
Op wick_op(const RepModel& m, const std::vector<Vec>& letters);   // W(e1 x ... x en)
Op wick_basis_op(const RepModel& m, const std::vector<int>& word);

SparseVec op_to_symbol(const Op& x, const FockSpace& fs);
Op symbol_to_op(const RepModel& m, const SparseVec& symbol, double drop = 0.0);

Mat mod_unitary(const RepModel& m, double t);  // diagonal A^{it}
SparseVec modular_flow_symbol(const RepModel& m, double t, const SparseVec& symbol);
Op modular_conjugate(const RepModel& m, double t, const Op& x);

cplx two_point_closed(const RepModel& m, const Vec& xi, const Vec& eta);
cplx state_moment(const RepModel& m, const Vec& xi, int power);  // chi(W(xi)^power)

struct MajfReport {
    NormReport mixed;    // (1/n) sum alpha_i ell(e_i) ell(f_i)*
    NormReport raising;  // (1/n) sum alpha_i ell(e_i) ell(f_i)
    double bound_mixed = 0.0;    // 1/n
    double bound_raising = 0.0;  // 1/sqrt(n)
    double slack_mixed = 0.0;
    double slack_raising = 0.0;
};
MajfReport majf_check(int L, const std::vector<cplx>& alphas,
                      const std::vector<Vec>& es, const std::vector<Vec>& fs);

struct OrthoSystem {
    std::vector<Vec> e;     // orthonormal, I e_i has norm <= 1
    std::vector<Vec> ebar;  // I e_i
};
OrthoSystem select_orthogonal_system(const RepModel& m, int n);

}  // namespace focklab
