#include <cstdio>
#include <cstdlib>

#include "bolza/verify.hpp"

int main() {
    bolza::RunConfig cfg;
    cfg.kmax = 11;
    if (const char* k = std::getenv("BOLZA_ACCEPT_KMAX")) cfg.kmax = std::atoi(k);
    bolza::VerifyReport rep = bolza::run_acceptance(cfg, true);
    std::printf("acceptance: %s\n", rep.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    return rep.all_pass() ? 0 : 1;
}
