#pragma once

#include "focklab/radial.hpp"

namespace focklab {

// Polynomials sum c(i,j) S^i S^*j in the shift algebra, kept in normal
// order via S*S = 1. The radial functional gamma(S^i S^*j) = phi(i+j) is
// evaluated exactly on coefficients; lower-bound witnesses |gamma(x)|/||x||
// divide by a certified upper bound on the true operator norm of x (the
// truncated Fock realization only bounds it from below, which would inflate
// witnesses), so every reported witness is a sound lower bound certificate
// for the multiplier norm.
struct SPoly {
    Mat c;  // (deg+1) x (deg+1), c(i, j) multiplies S^i S^*j

    int deg() const { return int(c.rows()) - 1; }
};

SPoly sp_zero(int deg);
SPoly sp_monomial(int i, int j, cplx a);
SPoly sp_add(const SPoly& a, const SPoly& b);
SPoly sp_scale(cplx a, const SPoly& x);
SPoly sp_mul(const SPoly& a, const SPoly& b);
SPoly sp_adjoint(const SPoly& x);
double sp_l1(const SPoly& x);

// matrix of x on the compressed shift space C^{N+1}
Mat sp_matrix(const SPoly& x, int N);

cplx sp_gamma(const RadialSymbol& s, const SPoly& x);

// certified upper bound: split x*x into bilateral Laurent symbol plus a
// finite corner block, iterate on squared powers, include the l1 bound
double sp_norm_upper(const SPoly& x, int squarings = 2);

struct ToeplitzWitnessReport {
    double radial = 0.0;
    double best = 0.0;
    double polar = 0.0;      // witness of the Hankel polar-phase candidate
    bool sound = true;       // every witness <= radial + 1e-9
    std::vector<double> witnesses;
};

ToeplitzWitnessReport toeplitz_lower_bound(const RadialSymbol& s, int N, int trials,
                                           std::uint64_t seed);

}  // namespace focklab
