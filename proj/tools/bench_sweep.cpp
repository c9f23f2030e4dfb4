// Times the exhaustive sweep with the serial reference driver and the
// OpenMP driver and checks that both produce the same report.

#include <chrono>
#include <cstring>
#include <iostream>

#include "lcf/verification.hpp"

namespace {

double run_timed(const lcf::SweepOptions& opt, bool parallel, lcf::SweepReport& out) {
    lcf::SweepOptions o = opt;
    o.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    out = parallel ? lcf::run_sweep(o) : lcf::run_sweep_serial(o);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = 5;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--n") == 0 && i + 1 < argc) n = std::atoi(argv[++i]);
    }
    lcf::SweepOptions opt;
    opt.n = n;

    lcf::SweepReport serial, parallel;
    double ts = run_timed(opt, false, serial);
    double tp = run_timed(opt, true, parallel);

    std::cout << "sweep n=" << n << " instances=" << serial.total << "\n";
    std::cout << "serial   " << ts << " s\n";
    std::cout << "parallel " << tp << " s\n";
    std::cout << "speedup  " << (tp > 0 ? ts / tp : 0.0) << "\n";

    if (serial.to_text() != parallel.to_text()) {
        std::cout << "MISMATCH between serial and parallel reports\n";
        return 1;
    }
    std::cout << "reports identical\n";
    return serial.clean() && parallel.clean() ? 0 : 1;
}
