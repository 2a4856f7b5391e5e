// Benchmarks the OpenMP-parallel enumeration kernels against the serial
// execution of the same kernels and against the deliberately naive reference
// implementation. Each timing row is cross-checked for equal results; a
// mismatch makes the run fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "avoidance/bijection.hpp"
#include "avoidance/census.hpp"
#include "avoidance/counting.hpp"
#include "avoidance/reference.hpp"

namespace av = avoidance;

namespace {

double time_seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

void print_row(const std::string& name, double serial, double parallel) {
    std::printf("%-34s %10.3fs %10.3fs %9.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel benchmark: serial vs OpenMP-parallel vs naive reference"};
    int count_n = 20;
    int stats_length = 20;
    int verify_n = 16;
    int reference_n = 18;
    bool skip_reference = false;
    app.add_option("--count-n", count_n, "word length for the brute-force count")
        ->capture_default_str();
    app.add_option("--stats-length", stats_length, "pattern length for the profile scan")
        ->capture_default_str();
    app.add_option("--verify-n", verify_n, "word length for bijection verification")
        ->capture_default_str();
    app.add_option("--reference-n", reference_n, "word length for the naive baseline count")
        ->capture_default_str();
    app.add_flag("--skip-reference", skip_reference, "skip the naive baseline");
    CLI11_PARSE(app, argc, argv);

    const av::EnumerationBudget budget{std::uint64_t{1} << 26};
    const auto p = av::Pattern::compile(av::Word::parse("0110", 2), 2);
    int failures = 0;

    std::printf("%-34s %11s %11s %10s\n", "kernel", "serial", "parallel", "speedup");
    std::printf("workers: %d\n", av::worker_count(av::Exec::parallel));

    {
        av::CountSeries serial, parallel;
        const double t_serial = time_seconds(
            [&] { serial = av::brute_force_counts(p, count_n, budget, av::Exec::serial); });
        const double t_parallel = time_seconds(
            [&] { parallel = av::brute_force_counts(p, count_n, budget, av::Exec::parallel); });
        print_row("brute_force_counts(0110, n=" + std::to_string(count_n) + ")", t_serial,
                  t_parallel);
        if (!serial.same_counts(parallel)) {
            std::printf("  MISMATCH between serial and parallel counts\n");
            ++failures;
        }
        if (!skip_reference) {
            av::BigInt naive;
            const double t_naive = time_seconds(
                [&] { naive = av::reference::count_avoiding(p.word(), 2, reference_n); });
            std::printf("%-34s %10.3fs   (n=%d, naive scanner baseline)\n", "reference::count_avoiding",
                        t_naive, reference_n);
            if (naive != serial.counts[static_cast<std::size_t>(reference_n)]) {
                std::printf("  MISMATCH between reference and kernel count at n=%d\n", reference_n);
                ++failures;
            }
        }
    }

    {
        std::pair<av::Fraction, av::Fraction> serial, parallel;
        const double t_serial = time_seconds(
            [&] { serial = av::borderless_stats(stats_length, 2, budget, av::Exec::serial); });
        const double t_parallel = time_seconds(
            [&] { parallel = av::borderless_stats(stats_length, 2, budget, av::Exec::parallel); });
        print_row("borderless_stats(l=" + std::to_string(stats_length) + ")", t_serial, t_parallel);
        if (serial != parallel) {
            std::printf("  MISMATCH between serial and parallel fractions\n");
            ++failures;
        }
    }

    {
        const av::PatternPair pair(p, av::Pattern::compile(av::Word::parse("0010", 2), 2));
        av::BijectionReport serial, parallel;
        const double t_serial = time_seconds(
            [&] { serial = av::verify_bijection(pair, verify_n, budget, av::Exec::serial); });
        const double t_parallel = time_seconds(
            [&] { parallel = av::verify_bijection(pair, verify_n, budget, av::Exec::parallel); });
        print_row("verify_bijection(0110/0010, n=" + std::to_string(verify_n) + ")", t_serial,
                  t_parallel);
        if (serial.bijective != parallel.bijective || serial.domain_size != parallel.domain_size ||
            serial.codomain_size != parallel.codomain_size) {
            std::printf("  MISMATCH between serial and parallel reports\n");
            ++failures;
        }
    }

    if (failures > 0) {
        std::printf("bench: %d cross-check failure(s)\n", failures);
        return 1;
    }
    std::printf("bench: all cross-checks passed\n");
    return 0;
}
