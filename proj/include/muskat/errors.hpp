#pragma once

#include <stdexcept>
#include <string>

namespace muskat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_gap)
        : Error(what), last_gap_(last_gap) {}
    double last_gap() const noexcept { return last_gap_; }

private:
    double last_gap_;
};

class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, double time)
        : Error(what), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

class StudyError : public Error {
public:
    StudyError(const std::string& what, double mu) : Error(what), mu_(mu) {}
    double mu() const noexcept { return mu_; }

private:
    double mu_;
};

}  // namespace muskat
