#include <chrono>
#include <cstdio>
#include <exception>

#include "commhom/checks.hpp"

/* Runs every registered check over its full documented range and prints one
 * verdict line each; exits nonzero if any fails. */
int main() {
    using clock = std::chrono::steady_clock;
    commhom::CheckOptions options;
    int failed = 0;
    int index = 0;
    for (const commhom::Check& check : commhom::check_registry()) {
        ++index;
        auto start = clock::now();
        commhom::CheckResult result;
        try {
            result = check.run(options);
        } catch (const std::exception& e) {
            result.name = check.name;
            result.pass = false;
            result.detail = e.what();
        }
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        std::printf("[%2d/%2d] %s %-26s %6.1fs  %s\n", index,
                    static_cast<int>(commhom::check_registry().size()),
                    result.pass ? "PASS" : "FAIL", result.name.c_str(), seconds,
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.pass) ++failed;
    }
    if (failed > 0) {
        std::printf("%d check(s) failed\n", failed);
        return 1;
    }
    std::printf("all %d checks passed\n", index);
    return 0;
}
