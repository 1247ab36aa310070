#ifndef TORCUR_SELFTEST_HPP
#define TORCUR_SELFTEST_HPP

// The full invariant suite of every module, run over the built-in fans
// with fixed seeds. Exposed both to the command-line selftest verb and
// to the test binaries.

#include <string>
#include <vector>

namespace torcur {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // empty on success
};

std::vector<CheckResult> run_selftest();

}  // namespace torcur

#endif
