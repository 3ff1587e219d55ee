#pragma once

#include "focklab/fock.hpp"

namespace focklab {

// Hot loops. Every kernel is a pure gather over independent output slots
// with a fixed inner summation order, so the OpenMP variants produce the
// same bytes as the serial references for any thread count. The serial
// versions are kept as the reference implementations for tests and the
// kernel benchmark.

// process-wide switch consulted by the dispatching wrappers
bool& parallel_kernels();

// creation ell(xi): prepend a letter, top degree overflow discarded
void kern_create_serial(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out);
void kern_create_omp(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out);

// annihilation ell(xi)*: contract the leading letter against xi
void kern_annih_serial(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out);
void kern_annih_omp(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out);

// block-diagonal tensor power 1 + T + T^x2 + ...: T applied mode by mode
void kern_tensor_power_serial(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out);
void kern_tensor_power_omp(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out);

void kern_create(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out);
void kern_annih(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out);
void kern_tensor_power(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out);

}  // namespace focklab
