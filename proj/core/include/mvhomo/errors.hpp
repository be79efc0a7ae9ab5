#pragma once

#include <stdexcept>
#include <string>

namespace mvhomo {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solver input is rank-deficient (collinear/coincident points, singular matrix).
class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

// Homogeneous denominator underflowed while mapping a point.
class PointAtInfinity : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class WindowTooLarge : public Error {
public:
    using Error::Error;
};

class ImageTooSmall : public Error {
public:
    using Error::Error;
};

// Malformed file content. `location()` is a byte offset for binary formats
// and a line number for text formats; -1 when not applicable.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what, long long location = -1)
        : Error(what), location_(location) {}
    long long location() const { return location_; }

private:
    long long location_;
};

// File carries an unknown magic/version tag.
class VersionError : public Error {
public:
    using Error::Error;
};

// A weighted reduction was requested against an all-zero mask.
class EmptyMask : public Error {
public:
    using Error::Error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (missing file, unreadable path, write failure).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace mvhomo
