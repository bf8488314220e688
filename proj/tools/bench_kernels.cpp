// Serial reference vs OpenMP kernel timings. Each pair must agree exactly.
#include "wittkit/enumeration.hpp"
#include "wittkit/oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

using namespace wittkit;

namespace {

double seconds(const std::function<void()>& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(const char* name, double ts, double tp, bool same)
{
    std::printf("%-44s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", name, ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "identical" : "MISMATCH");
    return same;
}

FiniteLinkingForm hyperbolic_sum(long p, int planes)
{
    FiniteLinkingForm f;
    f.p = p;
    f.orders.assign(2 * planes, 1);
    f.gram = MatQ(2 * planes, 2 * planes);
    for (int k = 0; k < planes; ++k) f.gram(2 * k, 2 * k + 1) = f.gram(2 * k + 1, 2 * k) = BigRat(1, p);
    return f;
}

}  // namespace

int main(int argc, char** argv)
{
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    std::printf("OpenMP threads: %d%s\n", omp_get_max_threads(), quick ? " (quick)" : "");
    bool ok = true;

    {
        FormSpace s(3, quick ? std::vector<int>{1, 1, 1} : std::vector<int>{1, 1, 1, 1}, 1);
        std::vector<uint32_t> a, b;
        double ts = seconds([&] { a = invariant_codes_serial(s); });
        double tp = seconds([&] { b = invariant_codes(s); });
        ok &= report(quick ? "invariant_codes p=3 [1,1,1]" : "invariant_codes p=3 [1,1,1,1]", ts, tp, a == b);
    }
    {
        FormSpace s(5, quick ? std::vector<int>{1, 2} : std::vector<int>{1, 1, 2}, 1);
        std::vector<uint32_t> a, b;
        double ts = seconds([&] { a = invariant_codes_serial(s); });
        double tp = seconds([&] { b = invariant_codes(s); });
        ok &= report(quick ? "invariant_codes p=5 [1,2]" : "invariant_codes p=5 [1,1,2]", ts, tp, a == b);
    }
    {
        auto f = hyperbolic_sum(3, quick ? 1 : 2);
        std::vector<std::vector<int>> a, b;
        double ts = seconds([&] { a = enumerate_lagrangians(f, false); });
        double tp = seconds([&] { b = enumerate_lagrangians(f, true); });
        ok &= report(quick ? "enumerate_lagrangians H(3)" : "enumerate_lagrangians H(3)+H(3)", ts, tp, a == b);
    }
    {
        auto f = hyperbolic_sum(quick ? 3 : 5, 2);
        OracleResult a, b;
        double ts = seconds([&] { a = brute_force_lagrangians_serial(f, OracleMode::ComplementaryPair); });
        double tp = seconds([&] { b = brute_force_lagrangians(f, OracleMode::ComplementaryPair); });
        bool same = a.found == b.found && a.witnesses == b.witnesses && a.lagrangian_count == b.lagrangian_count;
        ok &= report(quick ? "oracle complementary pair H(3)+H(3)" : "oracle complementary pair H(5)+H(5)", ts, tp,
                     same);
    }
    return ok ? 0 : 1;
}
