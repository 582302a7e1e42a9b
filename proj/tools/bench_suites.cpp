// Times the parallel suite runner against the serial reference and checks
// that both produce identical report sequences.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "opmean/verify.hpp"

using namespace opmean;

namespace {

double run_timed(const std::string& suite, const SuiteConfig& cfg, bool parallel,
                 std::vector<PropertyReport>& out) {
    const auto start = std::chrono::steady_clock::now();
    out = run_suite(suite, cfg, parallel);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

bool identical(const std::vector<PropertyReport>& x,
               const std::vector<PropertyReport>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i].to_line() != y[i].to_line() ||
            x[i].instance_digest != y[i].instance_digest)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    SuiteConfig cfg;
    cfg.trials = argc > 1 ? std::stoi(argv[1]) : 100;
    cfg.seed = argc > 2 ? std::stoull(argv[2]) : 1;

    std::cout << "suite,serial_s,parallel_s,speedup,identical\n";
    bool all_identical = true;
    for (const std::string& suite : suite_names()) {
        std::vector<PropertyReport> serial_reports, parallel_reports;
        const double ts = run_timed(suite, cfg, false, serial_reports);
        const double tp = run_timed(suite, cfg, true, parallel_reports);
        const bool same = identical(serial_reports, parallel_reports);
        all_identical = all_identical && same;
        std::cout << suite << ',' << ts << ',' << tp << ',' << ts / tp << ','
                  << (same ? "yes" : "NO") << "\n";
    }
    return all_identical ? 0 : 1;
}
