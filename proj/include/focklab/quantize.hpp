#pragma once

#include "focklab/model.hpp"
#include "focklab/radial.hpp"

namespace focklab {

// Contraction on the one-particle space, with a certified norm bound and the
// compatibility defect ||ITI - T|| (ITI is linear, I being conjugate linear).
struct ContractionSpec {
    Mat T;
    double norm_bound = 0.0;
    double i_defect = 0.0;
};

double i_compatibility_defect(const RepModel& m, const Mat& t);
ContractionSpec make_contraction(const RepModel& m, const Mat& t);

// degree-block operator 1 on vacuum, T^{x n} on degree n
Op first_quantization(const ContractionSpec& t);

// symbol-level second quantization; requires i_defect <= 1e-12
SparseVec second_quantize_symbol(const RepModel& m, const ContractionSpec& t,
                                 const SparseVec& symbol);

// degree-wise conjugation I^{x n} (conjugate linear)
SparseVec fock_conjugation(const RepModel& m, const SparseVec& symbol);

struct FunctorReport {
    int cases = 0;
    double max_residual = 0.0;
    bool pass = false;
};

// For a unitary: conjugation by the first quantization maps creation
// monomials letterwise. For a projection: the compression to the subspace
// Fock space equals the mapped monomial there.
FunctorReport toeplitz_functor_check(const RepModel& m, const Mat& t, int monomials,
                                     std::uint64_t seed, double tol = 1e-12);

// Smallest greedy union of eigenvalue bands (plus, when needed, the fixed
// conjugation-invariant block projection) with ||Tf - f|| <= eps ||f|| on F.
ContractionSpec band_approximant(const RepModel& m, const std::vector<Vec>& f,
                                 double eps);

// widened band across several couples, scaled by 1/(1 + 2 delta / lambda)
ContractionSpec merged_band_contraction(const RepModel& m,
                                        const std::vector<int>& band_ids,
                                        double delta);

double contraction_rank(const Mat& t);

// one element of the approximation net: radial cutoff composed with a
// quantized contraction; rank can be astronomically large, kept as double
struct CmapElement {
    RadialSymbol phi;
    ContractionSpec t;
    double rank = 0.0;
    double certificate = 0.0;
};

CmapElement cmap_map(const RepModel& m, const RadialSymbol& s, const ContractionSpec& t);
SparseVec cmap_apply(const RepModel& m, const CmapElement& e, const SparseVec& symbol);

}  // namespace focklab
