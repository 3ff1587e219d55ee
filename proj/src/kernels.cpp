#include "focklab/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace focklab {

bool& parallel_kernels() {
    static bool on = true;
    return on;
}

namespace {

inline void create_block(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out,
                         int n, index_t r) {
    // output word of degree n is (j, tail); r enumerates the degree block
    index_t tail_sz = fs.degree_size(n - 1);
    int j = int(r / tail_sz);
    index_t tail = r % tail_sz;
    out[fs.off[n] + r] = xi[j] * in[fs.off[n - 1] + tail];
}

inline void annih_block(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out,
                        int n, index_t r) {
    index_t blk = fs.degree_size(n);
    cplx acc(0.0);
    const index_t src = fs.off[n + 1] + r;
    for (int j = 0; j < fs.d; ++j) acc += std::conj(xi[j]) * in[src + j * blk];
    out[fs.off[n] + r] = acc;
}

}  // namespace

void kern_create_serial(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out) {
    out = Vec::Zero(fs.total);
    for (int n = 1; n <= fs.L; ++n) {
        index_t sz = fs.degree_size(n);
        for (index_t r = 0; r < sz; ++r) create_block(fs, xi, in, out, n, r);
    }
}

void kern_create_omp(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out) {
    out = Vec::Zero(fs.total);
    for (int n = 1; n <= fs.L; ++n) {
        index_t sz = fs.degree_size(n);
#pragma omp parallel for schedule(static)
        for (index_t r = 0; r < sz; ++r) create_block(fs, xi, in, out, n, r);
    }
}

void kern_annih_serial(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out) {
    out = Vec::Zero(fs.total);
    for (int n = 0; n < fs.L; ++n) {
        index_t sz = fs.degree_size(n);
        for (index_t r = 0; r < sz; ++r) annih_block(fs, xi, in, out, n, r);
    }
}

void kern_annih_omp(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out) {
    out = Vec::Zero(fs.total);
    for (int n = 0; n < fs.L; ++n) {
        index_t sz = fs.degree_size(n);
#pragma omp parallel for schedule(static)
        for (index_t r = 0; r < sz; ++r) annih_block(fs, xi, in, out, n, r);
    }
}

namespace {

// one mode pass: view the degree block as (a, i, b) with i the mode index,
// contract T over i; out and in must be distinct buffers of the block size
template <bool kParallel>
void mode_pass(const Mat& T, int d, index_t lead, index_t trail,
               const cplx* in, cplx* out) {
    const index_t slots = lead * trail;
#pragma omp parallel for schedule(static) if (kParallel)
    for (index_t s = 0; s < slots; ++s) {
        const index_t a = s / trail;
        const index_t b = s % trail;
        const cplx* src = in + a * d * trail + b;
        cplx* dst = out + a * d * trail + b;
        for (int i = 0; i < d; ++i) {
            cplx acc(0.0);
            for (int j = 0; j < d; ++j) acc += T(i, j) * src[j * trail];
            dst[i * trail] = acc;
        }
    }
}

template <bool kParallel>
void tensor_power_impl(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out) {
    out = in;
    if (fs.L == 0) return;
    Vec tmp(fs.degree_size(fs.L));
    for (int n = 1; n <= fs.L; ++n) {
        index_t sz = fs.degree_size(n);
        cplx* cur = out.data() + fs.off[n];
        cplx* alt = tmp.data();
        index_t lead = 1;
        index_t trail = sz / fs.d;
        for (int k = 0; k < n; ++k) {
            mode_pass<kParallel>(T, fs.d, lead, trail, cur, alt);
            std::swap(cur, alt);
            lead *= fs.d;
            trail /= fs.d;
        }
        if (cur != out.data() + fs.off[n])
            std::copy(cur, cur + sz, out.data() + fs.off[n]);
    }
}

}  // namespace

void kern_tensor_power_serial(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out) {
    tensor_power_impl<false>(fs, T, in, out);
}

void kern_tensor_power_omp(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out) {
    tensor_power_impl<true>(fs, T, in, out);
}

void kern_create(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out) {
    if (parallel_kernels()) kern_create_omp(fs, xi, in, out);
    else kern_create_serial(fs, xi, in, out);
}

void kern_annih(const FockSpace& fs, const Vec& xi, const Vec& in, Vec& out) {
    if (parallel_kernels()) kern_annih_omp(fs, xi, in, out);
    else kern_annih_serial(fs, xi, in, out);
}

void kern_tensor_power(const FockSpace& fs, const Mat& T, const Vec& in, Vec& out) {
    if (parallel_kernels()) kern_tensor_power_omp(fs, T, in, out);
    else kern_tensor_power_serial(fs, T, in, out);
}

}  // namespace focklab
