// Dispatcher-vs-oracle agreement over every connected labeled graph with up
// to six vertices: all seven searches, both tree flavors, root/branch/any,
// every vertex, with witness replay on every positive answer.

#include <chrono>
#include <iostream>

#include "gsleaf/gsleaf.hpp"

int main() {
    using namespace gsleaf;
    auto t0 = std::chrono::steady_clock::now();
    CertifyReport rep = certify("DISPATCH", CertifyOptions{6});
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "dispatcher agreement n<=6: " << (rep.pass ? "pass" : "FAIL") << " ("
              << rep.graphs << " graphs, " << rep.checks << " queries, " << secs << "s)\n";
    if (!rep.pass) {
        std::cout << rep.counterexample->detail << "\n" << rep.counterexample->edges;
        return 1;
    }
    return 0;
}
