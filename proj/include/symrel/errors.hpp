#ifndef SYMREL_ERRORS_HPP
#define SYMREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symrel {

// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation would exceed the configured scale guard.
class scale_error : public error {
public:
    explicit scale_error(const std::string& msg) : error(msg) {}
};

} // namespace symrel

#endif
