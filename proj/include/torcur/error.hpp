#ifndef TORCUR_ERROR_HPP
#define TORCUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace torcur {

// All contract violations are thrown as Error with a module tag, so the
// CLI can surface module-qualified diagnostics and exit nonzero.
class Error : public std::runtime_error {
  public:
    Error(const std::string& module, const std::string& msg)
        : std::runtime_error(module + ": " + msg), module_(module) {}

    const std::string& module() const { return module_; }

  private:
    std::string module_;
};

}  // namespace torcur

#endif
