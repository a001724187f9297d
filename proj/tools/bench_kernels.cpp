// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <vector>

#include "hilbetti/oracle.hpp"
#include "hilbetti/staircase.hpp"

using namespace hilbetti;
namespace chrono = std::chrono;

namespace {

double seconds(chrono::steady_clock::time_point start) {
    return chrono::duration<double>(chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(F&& fn) {
    auto start = chrono::steady_clock::now();
    fn();
    return seconds(start);
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(32) << name << " serial " << std::setw(9) << serial
              << " parallel " << std::setw(9) << parallel << " speedup "
              << std::setprecision(2) << std::fixed << (serial / parallel)
              << (same ? "" : "  MISMATCH") << std::defaultfloat << std::setprecision(6)
              << "\n";
}

}  // namespace

int main() {
    std::cout << "kernel benchmarks (serial reference vs OpenMP)\n\n";

    {
        // 20 generators: 2^20 subsets in the series numerator.
        std::vector<Monomial> gens;
        for (int a = 0; a < 20; ++a) {
            gens.push_back(Monomial({a + 1, 20 - a, (a * 7) % 5, (a * 3) % 4}));
        }
        MonomialIdeal ideal(4, std::move(gens));
        RatPoly serial_out, parallel_out;
        double ts = timed([&] { serial_out = hilbert_series_numerator(ideal, Exec::Serial); });
        double tp = timed([&] { parallel_out = hilbert_series_numerator(ideal, Exec::Parallel); });
        report("hilbert_series_numerator", ts, tp, serial_out == parallel_out);
    }

    {
        // Box scan: closure check + generator collection over a 5-axis box.
        std::vector<Orthant> orthants;
        for (int axis = 0; axis < 5; ++axis) {
            for (int off = 0; off < 6; ++off) {
                std::vector<std::pair<int, int>> offsets;
                for (int other = 0; other < 5; ++other) {
                    if (other != axis) offsets.emplace_back(other, 0);
                }
                offsets[0].second = off;
                orthants.push_back(Orthant::make(5, {axis}, offsets));
            }
        }
        Arrangement arr(5, std::move(orthants));
        MonomialIdeal serial_out = MonomialIdeal::zero(5);
        MonomialIdeal parallel_out = MonomialIdeal::zero(5);
        double ts = timed([&] { serial_out = ideal_of_union(arr, Exec::Serial); });
        double tp = timed([&] { parallel_out = ideal_of_union(arr, Exec::Parallel); });
        report("ideal_of_union box scan", ts, tp, serial_out == parallel_out);
    }

    {
        // Full arrangement-oracle run on the plane.
        AmbientDim dim(2);
        RatPoly target = encode(Partition({2, 2, 1, 1, 1}));
        OracleOptions serial_opts, parallel_opts;
        serial_opts.exec = Exec::Serial;
        parallel_opts.exec = Exec::Parallel;
        OracleReport rs, rp;
        double ts = timed([&] { rs = count_by_arrangements(dim, target, serial_opts); });
        double tp = timed([&] { rp = count_by_arrangements(dim, target, parallel_opts); });
        report("count_by_arrangements (2^2,1^3)", ts, tp, rs.count == rp.count);
    }

    {
        // Full ideal-oracle run on the plane.
        AmbientDim dim(2);
        RatPoly target = RatPoly::constant(BigRat(4));
        OracleOptions serial_opts, parallel_opts;
        serial_opts.exec = Exec::Serial;
        parallel_opts.exec = Exec::Parallel;
        OracleReport rs, rp;
        double ts = timed([&] { rs = count_by_ideals(dim, target, serial_opts); });
        double tp = timed([&] { rp = count_by_ideals(dim, target, parallel_opts); });
        report("count_by_ideals (1^4)", ts, tp, rs.count == rp.count);
    }

    return 0;
}
