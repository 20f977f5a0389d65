#ifndef POWCOUNT_ERRORS_HPP
#define POWCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powcount {

// Resource guard exceeded (oracle enumeration budget, table size cap, ...).
// Guards fail loudly; nothing is ever silently truncated.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested tolerance cannot be honored in the working precision.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature exhausted its refinement budget.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

// A postcondition that should hold by theory was violated (e.g. a negative
// coefficient out of the alternating-sign product).
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace powcount

#endif
