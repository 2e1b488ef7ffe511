#ifndef IRISLOC_ERRORS_HPP
#define IRISLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irisloc {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated a documented precondition (bad sigma, bad config, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// --- image I/O ---

class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

class CorruptFileError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// --- image operations ---

class ImageTooSmallError : public Error {
public:
    using Error::Error;
};

class EmptyIntersectionError : public Error {
public:
    using Error::Error;
};

// --- circle search ---

class AllSamplesOutsideError : public Error {
public:
    using Error::Error;
};

class RangeTooSmallError : public Error {
public:
    using Error::Error;
};

class NoCircleFoundError : public Error {
public:
    using Error::Error;
};

// --- descriptor / detector / trainer ---

class WrongWindowSizeError : public Error {
public:
    using Error::Error;
};

class InsufficientNegativeSpaceError : public Error {
public:
    using Error::Error;
};

class DegenerateLabelsError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class ImageSmallerThanMinScaleError : public Error {
public:
    using Error::Error;
};

// --- evaluation ---

class EmptyAfterClipError : public Error {
public:
    using Error::Error;
};

class EmptyListError : public Error {
public:
    using Error::Error;
};

// --- dataset files ---

/// Carries the 1-based line number of the offending CSV row.
class ParseError : public Error {
public:
    ParseError(const std::string& file, int line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class DuplicateIdError : public ParseError {
public:
    using ParseError::ParseError;
};

class MissingImageError : public ParseError {
public:
    using ParseError::ParseError;
};

// --- synthetic rendering ---

class InvalidParamsError : public Error {
public:
    using Error::Error;
};

// --- harness ---

class ConfigError : public Error {
public:
    using Error::Error;
};

class ExperimentError : public Error {
public:
    using Error::Error;
};

} // namespace irisloc

#endif // IRISLOC_ERRORS_HPP
