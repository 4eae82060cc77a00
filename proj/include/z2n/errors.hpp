#pragma once

#include <stdexcept>
#include <string>

namespace z2n {

// Base class for all kernel errors. `kind` is a stable machine-readable name
// used by the CLI for exit-code mapping and error reporting.
class KernelError : public std::runtime_error {
public:
    KernelError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct AlgebraMismatch : KernelError {
    explicit AlgebraMismatch(const std::string& m) : KernelError("AlgebraMismatch", m) {}
};
struct NonInvertible : KernelError {
    explicit NonInvertible(const std::string& m) : KernelError("NonInvertible", m) {}
};
struct NotInvertible : KernelError {
    explicit NotInvertible(const std::string& m) : KernelError("NotInvertible", m) {}
};
struct DegreeViolation : KernelError {
    explicit DegreeViolation(const std::string& m) : KernelError("DegreeViolation", m) {}
};
struct ShapeMismatch : KernelError {
    explicit ShapeMismatch(const std::string& m) : KernelError("ShapeMismatch", m) {}
};
struct WrongDegreeComponent : KernelError {
    explicit WrongDegreeComponent(const std::string& m) : KernelError("WrongDegreeComponent", m) {}
};
struct CapTooSmall : KernelError {
    explicit CapTooSmall(const std::string& m) : KernelError("CapTooSmall", m) {}
};
struct NotLinear : KernelError {
    explicit NotLinear(const std::string& m) : KernelError("NotLinear", m) {}
};
struct NotNatural : KernelError {
    explicit NotNatural(const std::string& m) : KernelError("NotNatural", m) {}
};
struct ParityViolation : KernelError {
    explicit ParityViolation(const std::string& m) : KernelError("ParityViolation", m) {}
};

class SyntaxError : public KernelError {
public:
    SyntaxError(int line, int col, const std::string& msg)
        : KernelError("SyntaxError",
                      "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace z2n
