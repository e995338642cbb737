#include "phtype/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    phtype::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--quick") {
            opt.quick = true;
        } else if (a == "--seed" && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::cerr << "usage: phtype_acceptance [--quick] [--seed N]\n";
            return 2;
        }
    }
    int failed = 0;
    for (const auto& r : phtype::run_acceptance(opt)) {
        std::cout << phtype::format_result(r) << std::endl;
        failed += !r.ok;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << failed << " failing)" << std::endl;
    return failed ? 1 : 0;
}
