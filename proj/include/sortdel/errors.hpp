#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sortdel {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty point set") {}
};

class NonFiniteCoordinate : public Error {
public:
    explicit NonFiniteCoordinate(std::size_t line)
        : Error("non-finite coordinate at line " + std::to_string(line)), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class AllCollinear : public Error {
public:
    AllCollinear() : Error("all points are collinear") {}
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class DegenerateEdge : public Error {
public:
    DegenerateEdge() : Error("in-circle edge endpoints coincide") {}
};

class OppositeSideViolation : public Error {
public:
    OppositeSideViolation() : Error("query point and opposite vertex are not separated by the edge") {}
};

class MapInconsistency : public Error {
public:
    using Error::Error;
};

class MissingEdge : public Error {
public:
    using Error::Error;
};

class MissingOpposite : public Error {
public:
    using Error::Error;
};

class CollinearTriangle : public Error {
public:
    CollinearTriangle() : Error("reference triangle is collinear") {}
};

class TooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace sortdel
