// Benchmark comparing the serial reference path against the OpenMP worker
// pool on the two parallel surfaces: the exclusion claim ledger and the
// sampled germ regularity checks. Results must agree exactly between the two
// schedules; the timings show whatever the machine offers.

#include <chrono>
#include <iostream>
#include <sstream>

#include "fano/exclusion.hpp"
#include "fano/germ.hpp"
#include "fano/parallel.hpp"
#include "fano/report.hpp"

using namespace fano;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string ledger_fingerprint(const LedgerResult& r) {
  std::ostringstream os;
  for (auto& c : r.cases) os << to_json(c).dump() << "\n";
  return os.str();
}

std::string regularity_fingerprint(const RegularityReport& r) { return to_json(r).dump(); }

}  // namespace

int main(int argc, char** argv) {
  int threads = hardware_threads();
  if (argc > 1) threads = std::atoi(argv[1]);
  std::cout << "hardware threads: " << hardware_threads() << ", parallel run uses " << threads
            << "\n\n";

  {
    LedgerConfig config;
    config.M_min = 5;
    config.M_max = 16;
    config.threads = 1;
    auto t0 = Clock::now();
    auto serial = run_claim_ledger(config);
    double ts = seconds_since(t0);

    config.threads = threads;
    t0 = Clock::now();
    auto parallel = run_claim_ledger(config);
    double tp = seconds_since(t0);

    bool same = ledger_fingerprint(serial) == ledger_fingerprint(parallel);
    std::cout << "claim ledger (M in [5,16], " << serial.cases.size() << " cases)\n"
              << "  serial:   " << ts << " s\n"
              << "  parallel: " << tp << " s  (speedup " << (tp > 0 ? ts / tp : 0) << ")\n"
              << "  results identical: " << (same ? "yes" : "NO") << "\n\n";
    if (!same) return 1;
  }

  {
    auto germ = random_germ(5, 3, 20240817, FpCtx{32003});
    auto t0 = Clock::now();
    auto serial = check_regularity(germ, 6, 42, 1);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    auto parallel = check_regularity(germ, 6, 42, threads);
    double tp = seconds_since(t0);

    bool same = regularity_fingerprint(serial) == regularity_fingerprint(parallel);
    std::cout << "germ regularity (M=5, mu=3, 6 sample points)\n"
              << "  serial:   " << ts << " s\n"
              << "  parallel: " << tp << " s  (speedup " << (tp > 0 ? ts / tp : 0) << ")\n"
              << "  results identical: " << (same ? "yes" : "NO") << "\n";
    if (!same) return 1;
  }
  return 0;
}
