#pragma once

#include <stdexcept>
#include <string>

namespace s7lab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonOrthogonal : public Error {
public:
    using Error::Error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class NotTangent : public Error {
public:
    using Error::Error;
};

class OutOfChart : public Error {
public:
    using Error::Error;
};

class AntipodalPoint : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
public:
    using Error::Error;
};

class UnsupportedOperator : public Error {
public:
    using Error::Error;
};

}  // namespace s7lab
