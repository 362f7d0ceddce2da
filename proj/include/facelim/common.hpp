#ifndef FACELIM_COMMON_HPP
#define FACELIM_COMMON_HPP

#include <stdexcept>
#include <string>

namespace facelim {

/// Raised for malformed user input (documents, labels, domain strings).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Outcome of a verification-style operation. `witness` is empty on pass and
/// names the offending face/degree/cell otherwise.
struct CheckResult {
    bool pass = false;
    std::string witness;

    static CheckResult ok() { return {true, {}}; }
    static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

}  // namespace facelim

#endif
