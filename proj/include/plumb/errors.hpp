#pragma once

#include <stdexcept>
#include <string>

namespace plumb {

// Input-layer failures (bad files, bad syntax, malformed graphs).
// The CLI maps these to exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Mathematical precondition failures. The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PLUMB_DOMAIN_ERROR(name)                          \
    class name : public domain_error {                    \
    public:                                               \
        using domain_error::domain_error;                 \
    }

PLUMB_DOMAIN_ERROR(not_negative_definite);
PLUMB_DOMAIN_ERROR(not_numerically_gorenstein);
PLUMB_DOMAIN_ERROR(not_small);
PLUMB_DOMAIN_ERROR(non_integral_chern);
PLUMB_DOMAIN_ERROR(not_contractible);
PLUMB_DOMAIN_ERROR(invalid_center);
PLUMB_DOMAIN_ERROR(not_special_graph);
PLUMB_DOMAIN_ERROR(not_minimal_model);
PLUMB_DOMAIN_ERROR(box_too_small);
PLUMB_DOMAIN_ERROR(no_conductor_in_box);

#undef PLUMB_DOMAIN_ERROR

} // namespace plumb
