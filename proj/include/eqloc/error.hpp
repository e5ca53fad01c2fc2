#ifndef EQLOC_ERROR_HPP
#define EQLOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eqloc
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic domain violations: division by zero, inverting a non-unit,
// infinite limits.
class DomainError : public Error
{
public:
    using Error::Error;
};

// Malformed expression text. pos is the 0-based offset of the offending token.
class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos), detail_(msg)
    {
    }

    std::size_t pos() const noexcept { return pos_; }
    const std::string &detail() const noexcept { return detail_; }

private:
    std::size_t pos_;
    std::string detail_;
};

// Structurally invalid fixed-point data. path names the offending field,
// e.g. "components[1].normal[0].lambda".
class ValidationError : public Error
{
public:
    ValidationError(std::string path, const std::string &msg)
        : Error(path.empty() ? msg : path + ": " + msg), path_(std::move(path)), detail_(msg)
    {
    }

    const std::string &path() const noexcept { return path_; }
    const std::string &detail() const noexcept { return detail_; }

private:
    std::string path_;
    std::string detail_;
};

} // namespace eqloc

#endif
