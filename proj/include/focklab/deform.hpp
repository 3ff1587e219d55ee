#pragma once

#include "focklab/model.hpp"

namespace focklab {

// Two commuting copies of the representation on H + H; the deformation
// rotates between them while the conjugation beta flips the second copy.
struct Doubled {
    RepModel base;
    RepModel dbl;
};

Doubled make_doubled(const RepModel& base);

Vec iota1(const Doubled& dm, const Vec& xi);
Vec iota2(const Doubled& dm, const Vec& xi);

Mat rot_mat(const Doubled& dm, double s);   // cos/sin block rotation by pi s / 2
Mat beta_mat(const Doubled& dm);            // Id on copy 1, -Id on copy 2

Op alpha_op(const Doubled& dm, double s);
Op beta_op(const Doubled& dm);
SparseVec alpha_symbol(const Doubled& dm, double s, const SparseVec& symbol);
SparseVec beta_symbol(const Doubled& dm, const SparseVec& symbol);

// orthogonal projection onto words with every letter in the first copy
SparseVec project_first_copy(const Doubled& dm, const SparseVec& symbol);
Vec project_first_copy(const Doubled& dm, const Vec& symbol);

struct MalleabilityReport {
    int cases = 0;
    double beta_involutive = 0.0;
    double commutation = 0.0;     // beta alpha_s vs alpha_{-s} beta
    double group_law = 0.0;       // alpha_s alpha_t vs alpha_{s+t}
    double copy_swap = 0.0;       // alpha_1 on first-copy words
    double flow_commutation = 0.0;
    double max_residual = 0.0;
    bool pass = false;
};
MalleabilityReport malleability_residuals(const Doubled& dm, int samples,
                                          std::uint64_t seed, double tol = 1e-12);

struct TransversalityReport {
    double lhs = 0.0;    // 2 || alpha_s(xi) - P alpha_s(xi) ||
    double rhs = 0.0;    // || xi - alpha_{2s}(xi) ||
    double slack = 0.0;  // lhs - rhs
};
TransversalityReport transversality_residual(const Doubled& dm, const Vec& symbol,
                                             double s);

struct SnReport {
    int n = 0;
    int cases = 0;
    double identity_residual = 0.0;  // Sn* Sn - 1 vs the Wick-word sum
    double norm_sum = 0.0;           // || (1/n) sum W(ebar_i x e_i) ||
    double part_lowering = 0.0;      // annihilation-only summand, bound 1/sqrt(n)
    double part_mixed = 0.0;         // creation-annihilation summand, bound 1/n
    double part_raising = 0.0;       // creation-only summand, bound 1/sqrt(n)
    double total_bound = 0.0;        // 3/sqrt(n)
    bool pass = false;
};
SnReport sn_identity_check(const RepModel& m, int n, double tol = 1e-12);

}  // namespace focklab
