#pragma once

#include <stdexcept>
#include <string>

namespace hilbetti {

struct NotAHilbertPolynomial : std::runtime_error {
    explicit NotAHilbertPolynomial(const std::string& what)
        : std::runtime_error("not a Hilbert polynomial: " + what) {}
};

struct NotPlaneHilbert : std::runtime_error {
    explicit NotPlaneHilbert(const std::string& what)
        : std::runtime_error("not a plane Hilbert polynomial: " + what) {}
};

struct InadmissiblePartition : std::runtime_error {
    explicit InadmissiblePartition(const std::string& what)
        : std::runtime_error("inadmissible partition: " + what) {}
};

struct NotSmooth : std::runtime_error {
    explicit NotSmooth(const std::string& what)
        : std::runtime_error("Hilbert scheme is not smooth: " + what) {}
};

struct UnsupportedFamily : std::runtime_error {
    explicit UnsupportedFamily(const std::string& what)
        : std::runtime_error("no closed-form Betti sum for this family: " + what) {}
};

struct NotSaturated : std::runtime_error {
    explicit NotSaturated(const std::string& what)
        : std::runtime_error("ideal is not saturated: " + what) {}
};

struct TooManyGenerators : std::runtime_error {
    explicit TooManyGenerators(const std::string& what)
        : std::runtime_error("too many generators: " + what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error("search budget exceeded: " + what) {}
};

}  // namespace hilbetti
