#pragma once

#include <stdexcept>
#include <string>

namespace csj {

// Bad numeric input (out-of-range argument, invalid ratio, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Inconsistent or incomplete configuration (missing material, bad model choice).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometric inconsistency; carries the name of the offending quantity.
class GeometryError : public std::runtime_error {
public:
    GeometryError(std::string quantity, const std::string& msg)
        : std::runtime_error(msg), quantity_(std::move(quantity)) {}
    const std::string& quantity() const { return quantity_; }

private:
    std::string quantity_;
};

// Input file syntax/schema failure; line 0 means "not line-specific".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Singular state in the plastic stress integrator.
class SingularStateError : public std::runtime_error {
public:
    SingularStateError(const std::string& msg, double sigma_h, double sigma_v)
        : std::runtime_error(msg), sigma_h(sigma_h), sigma_v(sigma_v) {}
    double sigma_h = 0.0;
    double sigma_v = 0.0;
};

}  // namespace csj
