#pragma once

#include <stdexcept>
#include <string>

namespace class16 {

/// Invalid input: wrong residue class, composite modulus, zero denominator, ...
/// Maps to CLI exit code 2.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A verified mathematical identity failed for a concrete prime.
/// Maps to CLI exit code 1.
class check_failure : public std::runtime_error {
public:
    explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree disagreed, or an asserted-integral value came
/// out fractional. Always a bug, never a property of the input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Represented-value search exhausted its (x, y) radius. Callers double the
/// bound and retry.
class search_bound_error : public std::runtime_error {
public:
    explicit search_bound_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace class16
