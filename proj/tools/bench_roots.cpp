#include <chrono>
#include <iostream>

#include "rootcong/order_core.hpp"

using namespace rootcong;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const MonicPoly& f, const Int& m,
               std::vector<Int> (*scan)(const MonicPoly&, const Int&),
               std::vector<Int>& out) {
    auto start = clock_type::now();
    out = scan(f, m);
    auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    long long max_m = argc > 1 ? std::atoll(argv[1]) : 2000000;
    MonicPoly f({0, 0, -2});
    std::cout << "m,serial_ms,parallel_ms,roots,agree\n";
    bool all_agree = true;
    for (long long m = 100000; m <= max_m; m *= 4) {
        std::vector<Int> serial, parallel;
        double ts = time_ms(f, m, roots_scan_serial, serial);
        double tp = time_ms(f, m, roots_scan_parallel, parallel);
        bool agree = serial == parallel;
        all_agree = all_agree && agree;
        std::cout << m << "," << ts << "," << tp << "," << serial.size() << ","
                  << (agree ? 1 : 0) << "\n";
    }
    return all_agree ? 0 : 1;
}
