// Times the serial reference kernels against their OpenMP counterparts and
// checks that both produce identical exact results. Two workloads: dense
// truncated-series products (coefficients of growing y-degree, the shape the
// genus series produce) and batch scene verification.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>
#include <random>

#include "singclass/engine.hpp"

using namespace singclass;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

PowerSeries random_series(int order, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    PowerSeries s(order);
    for (int k = 0; k < order; ++k) {
        YPolynomial c;
        for (int e = 0; e <= k / 4 + 2; ++e)
            c.set_coeff(e, Rational(num(rng), den(rng)));
        s.set_coeff(k, c);
    }
    return s;
}

void bench_series_mul() {
    std::mt19937 rng(20240811);
    std::cout << "series multiplication (exact, Laurent-in-y coefficients)\n";
    std::cout << "| order | serial ms | parallel ms | speedup |\n|---|---|---|---|\n";
    for (int order : {32, 64, 128, 256}) {
        PowerSeries a = random_series(order, rng);
        PowerSeries b = random_series(order, rng);
        auto t0 = Clock::now();
        PowerSeries r_serial = kernels::mul_serial(a, b);
        double t_serial = ms_since(t0);
        t0 = Clock::now();
        PowerSeries r_parallel = kernels::mul_parallel(a, b);
        double t_parallel = ms_since(t0);
        if (r_serial != r_parallel) {
            std::cerr << "MISMATCH between serial and parallel kernels\n";
            std::exit(1);
        }
        std::printf("| %d | %.2f | %.2f | %.2fx |\n", order, t_serial, t_parallel,
                    t_serial / t_parallel);
    }
}

Scene synthetic_scene(int i) {
    Scene s;
    s.ambient_dim = 3;
    s.degrees = {3 + (i % 3)};
    s.mode = SceneMode::hypersurface;
    s.points.push_back({SingularityGerm::ade('A', 1 + (i % 4), 2), 1 + (i % 3), true});
    s.name = "synthetic-" + std::to_string(i);
    s.validate();
    return s;
}

void bench_batch_verify() {
    const int n_scenes = 48;
    std::vector<Scene> scenes;
    for (int i = 0; i < n_scenes; ++i) scenes.push_back(synthetic_scene(i));

    std::cout << "\nbatch scene verification (" << n_scenes << " scenes)\n";
    auto t0 = Clock::now();
    int pass_serial = 0;
    for (auto& s : scenes) pass_serial += verify_scene(s).passed();
    double t_serial = ms_since(t0);

    int pass_parallel = 0;
    t0 = Clock::now();
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic) reduction(+ : pass_parallel)
#endif
    for (int i = 0; i < n_scenes; ++i) pass_parallel += verify_scene(scenes[i]).passed();
    double t_parallel = ms_since(t0);

    if (pass_serial != pass_parallel) {
        std::cerr << "MISMATCH between serial and parallel batch runs\n";
        std::exit(1);
    }
    std::printf("serial %.1f ms, parallel %.1f ms, speedup %.2fx (all %d passed)\n", t_serial,
                t_parallel, t_serial / t_parallel, pass_serial);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without OpenMP; parallel kernels run serially\n\n";
#endif
    bench_series_mul();
    bench_batch_verify();
    return 0;
}
