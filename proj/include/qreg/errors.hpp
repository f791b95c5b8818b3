#pragma once

#include <stdexcept>
#include <string>

namespace qreg {

// Operands belong to different coefficient domains (radicands, variable sets).
struct domain_mismatch : std::invalid_argument {
    explicit domain_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

struct invalid_base : std::invalid_argument {
    explicit invalid_base(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_digit : std::invalid_argument {
    explicit invalid_digit(const std::string& what) : std::invalid_argument(what) {}
};

struct degenerate_radicand : std::invalid_argument {
    explicit degenerate_radicand(const std::string& what) : std::invalid_argument(what) {}
};

struct excluded_parameter : std::invalid_argument {
    explicit excluded_parameter(const std::string& what) : std::invalid_argument(what) {}
};

struct undefined_index : std::invalid_argument {
    explicit undefined_index(const std::string& what) : std::invalid_argument(what) {}
};

struct degenerate_theta : std::invalid_argument {
    explicit degenerate_theta(const std::string& what) : std::invalid_argument(what) {}
};

struct unsupported_operation : std::domain_error {
    explicit unsupported_operation(const std::string& what) : std::domain_error(what) {}
};

struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qreg
