// Benchmark: full-catalog verification, serial reference vs parallel engine.
// Also asserts both paths produce byte-identical reports (timing excluded).

#include <chrono>
#include <iostream>

#include "reflex/engine.hpp"

using namespace reflex;

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    auto ids = catalog_ids(false);
    if (quick && ids.size() > 8) ids.resize(8);

    auto run = [&](int jobs) {
        auto t0 = std::chrono::steady_clock::now();
        auto reports = verify_entries(ids, {}, jobs);
        double ms = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count() /
                    1000.0;
        return std::pair{ms, report_json(reports, false)};
    };

    auto [serial_ms, serial_json] = run(1);
    std::cout << "serial reference: " << serial_ms << " ms over " << ids.size() << " entries\n";
#ifdef _OPENMP
    auto [par_ms, par_json] = run(0);
    std::cout << "parallel:         " << par_ms << " ms\n";
    std::cout << "speedup:          " << (par_ms > 0 ? serial_ms / par_ms : 0.0) << "x\n";
    if (serial_json != par_json) {
        std::cerr << "FAIL: serial and parallel reports differ\n";
        return 1;
    }
    std::cout << "reports identical across paths\n";
#else
    std::cout << "built without OpenMP; parallel comparison skipped\n";
#endif
    return 0;
}
