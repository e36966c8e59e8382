#pragma once

#include <stdexcept>
#include <string>

namespace kli {

// Base of every error raised by the library. Input and validation problems
// derive from InputError; numerical dead ends (antipodes, no convergence)
// derive from FlowError. The CLI maps the two families to distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class FlowError : public Error {
public:
    using Error::Error;
};

class NearZeroQuaternion : public InputError {
public:
    explicit NearZeroQuaternion(const std::string& what) : InputError(what) {}
};

class NonUnitQuaternion : public InputError {
public:
    explicit NonUnitQuaternion(const std::string& what) : InputError(what) {}
};

class InvalidConfig : public InputError {
public:
    explicit InvalidConfig(const std::string& what) : InputError(what) {}
};

class DomainError : public InputError {
public:
    explicit DomainError(const std::string& what) : InputError(what) {}
};

class TimeNotSampled : public InputError {
public:
    explicit TimeNotSampled(const std::string& what) : InputError(what) {}
};

class DegenerateArc : public InputError {
public:
    explicit DegenerateArc(const std::string& what) : InputError(what) {}
};

class AntipodalInput : public FlowError {
public:
    explicit AntipodalInput(const std::string& what) : FlowError(what) {}
};

class NonConvergence : public FlowError {
public:
    explicit NonConvergence(const std::string& what) : FlowError(what) {}
};

}  // namespace kli
