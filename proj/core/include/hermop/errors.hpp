#pragma once

// Error types shared by all hermop modules.
//
// domain_error: the input violates a documented precondition (bad index,
//   wrong shape, divergent parameter range, ...).  The CLI maps these to
//   exit code 2 with a structured error record.
// logic_error: an internal consistency check failed; always a bug.

#include <stdexcept>
#include <string>

namespace hermop {

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class logic_error : public std::logic_error {
public:
    explicit logic_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace hermop

#define HERMOP_DOMAIN_CHECK(cond, msg)                                        \
    do {                                                                      \
        if (!(cond)) throw ::hermop::domain_error(msg);                       \
    } while (0)

#define HERMOP_LOGIC_CHECK(cond, msg)                                         \
    do {                                                                      \
        if (!(cond)) throw ::hermop::logic_error(msg);                        \
    } while (0)
