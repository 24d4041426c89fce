#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcos {

// Base class for every error raised by the library. The `what()` string
// always starts with the error name so CLI callers can surface it verbatim.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class FileNotFound : public Error {
public:
    explicit FileNotFound(const std::string& path)
        : Error("FileNotFound: " + path) {}
};

class ParseError : public Error {
public:
    ParseError(std::int64_t line, const std::string& column, const std::string& detail)
        : Error("ParseError: line " + std::to_string(line) + ", column '" + column +
                "': " + detail),
          line(line), column(column) {}
    std::int64_t line;
    std::string column;
};

class NonPositivePrice : public Error {
public:
    explicit NonPositivePrice(std::int64_t line)
        : Error("NonPositivePrice: line " + std::to_string(line)), line(line) {}
    std::int64_t line;
};

class TimestampRegression : public Error {
public:
    explicit TimestampRegression(std::int64_t line)
        : Error("TimestampRegression: line " + std::to_string(line)), line(line) {}
    std::int64_t line;
};

class EmptySeries : public Error {
public:
    EmptySeries() : Error("EmptySeries: series has no ticks") {}
};

class NonFiniteLogPrice : public Error {
public:
    explicit NonFiniteLogPrice(std::size_t index)
        : Error("NonFiniteLogPrice: index " + std::to_string(index)), index(index) {}
    std::size_t index;
};

class InvalidThreshold : public Error {
public:
    explicit InvalidThreshold(double delta)
        : Error("InvalidThreshold: delta = " + std::to_string(delta)) {}
};

class InvalidRange : public Error {
public:
    explicit InvalidRange(const std::string& detail) : Error("InvalidRange: " + detail) {}
};

class NoEvents : public Error {
public:
    NoEvents() : Error("NoEvents: n_dc + n_os = 0") {}
};

class EmptyCycles : public Error {
public:
    EmptyCycles() : Error("EmptyCycles: no completed cycles") {}
};

class EmptyLengths : public Error {
public:
    EmptyLengths() : Error("EmptyLengths: no overshoot lengths") {}
};

class ZeroMean : public Error {
public:
    ZeroMean() : Error("ZeroMean: mean overshoot length is zero") {}
};

class MissingFields : public Error {
public:
    explicit MissingFields(const std::string& which)
        : Error("MissingFields: " + which) {}
};

class NoZoneFound : public Error {
public:
    NoZoneFound() : Error("NoZoneFound: no threshold reaches the target dcPct") {}
};

class TooFewPoints : public Error {
public:
    explicit TooFewPoints(std::size_t n)
        : Error("TooFewPoints: regression needs >= 3 points, got " + std::to_string(n)) {}
};

class NonPositiveFrequency : public Error {
public:
    explicit NonPositiveFrequency(std::size_t index)
        : Error("NonPositiveFrequency: index " + std::to_string(index)), index(index) {}
    std::size_t index;
};

class InvalidDof : public Error {
public:
    explicit InvalidDof(int dof) : Error("InvalidDof: " + std::to_string(dof)) {}
};

}  // namespace dcos
