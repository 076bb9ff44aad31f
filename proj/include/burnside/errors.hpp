#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

// Error taxonomy shared by the library and the CLI.
// The CLI maps parse/validity/domain errors to exit 2, resource errors to
// exit 3, and everything else (a broken internal invariant) to exit 1.

class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class validity_error : public std::runtime_error {
public:
  explicit validity_error(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace burnside
