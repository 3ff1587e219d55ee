#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "focklab/kernels.hpp"
#include "focklab/model.hpp"

using namespace focklab;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double omp, double check) {
    std::printf("%-16s %10.3f ms %10.3f ms %8.2fx   max dev %.3g\n",
                name, serial, omp, serial / omp, check);
}

}  // namespace

int main() {
    FockSpace fs = make_fock(4, 9);
    std::printf("space d=%d L=%d dim=%lld\n", fs.d, fs.L, static_cast<long long>(fs.total));
    std::printf("%-16s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(fs.total);
    for (index_t i = 0; i < fs.total; ++i) v[i] = cplx(gauss(rng), gauss(rng));
    Vec xi(fs.d);
    for (int i = 0; i < fs.d; ++i) xi[i] = cplx(gauss(rng), gauss(rng));
    Mat t(fs.d, fs.d);
    for (int i = 0; i < fs.d; ++i)
        for (int j = 0; j < fs.d; ++j) t(i, j) = cplx(gauss(rng), gauss(rng)) / double(fs.d);

    Vec a(fs.total), b(fs.total);
    const int reps = 7;

    double s = time_ms([&] { kern_create_serial(fs, xi, v, a); }, reps);
    double p = time_ms([&] { kern_create_omp(fs, xi, v, b); }, reps);
    row("create", s, p, (a - b).cwiseAbs().maxCoeff());

    s = time_ms([&] { kern_annih_serial(fs, xi, v, a); }, reps);
    p = time_ms([&] { kern_annih_omp(fs, xi, v, b); }, reps);
    row("annihilate", s, p, (a - b).cwiseAbs().maxCoeff());

    s = time_ms([&] { kern_tensor_power_serial(fs, t, v, a); }, reps);
    p = time_ms([&] { kern_tensor_power_omp(fs, t, v, b); }, reps);
    row("tensor power", s, p, (a - b).cwiseAbs().maxCoeff());

    RepModel m = build_model({{{2.0, 2}}, 1, 6});
    Op w = wick_basis_op(m, {0, 1, 2});
    parallel_kernels() = false;
    s = time_ms([&] { materialize(w, m.fock); }, 3);
    parallel_kernels() = true;
    p = time_ms([&] { materialize(w, m.fock); }, 3);
    Mat ms_ = materialize(w, m.fock);
    parallel_kernels() = false;
    Mat mp = materialize(w, m.fock);
    parallel_kernels() = true;
    row("materialize", s, p, (ms_ - mp).cwiseAbs().maxCoeff());
    return 0;
}
