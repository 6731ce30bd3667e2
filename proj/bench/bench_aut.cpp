// Serial reference scan vs OpenMP backtracking on the automorphism search.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gleib/kernels.hpp"

using namespace gleib;

namespace {

template <class F>
std::int64_t time_ms(F f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    struct Case {
        Family f;
        int n;
        std::int64_t p;
    };
    const Case cases[] = {{Family::NF, 3, 3}, {Family::NF, 3, 5}, {Family::F1, 3, 5}, {Family::NF, 3, 7}, {Family::F1, 3, 7}};
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("%-6s %2s %2s %10s %10s %10s %6s\n", "family", "n", "p", "count", "serial_ms", "omp_ms", "same");
    for (const auto& c : cases) {
        const auto s = PrimeStructure::from_algebra(make_family(c.f, c.n, FieldSpec::prime(c.p)));
        std::vector<ResidueMatrix> a, b;
        const auto ts = time_ms([&] { a = automorphisms_serial(s); });
        const auto tp = time_ms([&] { b = automorphisms_parallel(s); });
        std::printf("%-6s %2d %2lld %10zu %10lld %10lld %6s\n", std::string{family_name(c.f)}.c_str(), c.n,
                    static_cast<long long>(c.p), b.size(), static_cast<long long>(ts), static_cast<long long>(tp),
                    a == b ? "yes" : "NO");
    }
    std::printf("threads: %d\n", threads);
    return 0;
}
