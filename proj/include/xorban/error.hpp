#pragma once

#include <stdexcept>
#include <string>

namespace xorban
{

// Domain errors (bad input, unmet preconditions) derive from Error.
// DefectError is reserved for failed self-verification and must never
// surface on valid inputs.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class StructuralError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError( int line, const std::string& what )
            : Error( "line " + std::to_string( line ) + ": " + what ), _line{ line }
    {
    }

    [[nodiscard]] int line() const { return _line; }

private:
    int _line;
};

class LimitError : public Error
{
public:
    using Error::Error;
};

class PlanError : public Error
{
public:
    using Error::Error;
};

class RewriteError : public Error
{
public:
    using Error::Error;
};

class ClassificationError : public Error
{
public:
    using Error::Error;
};

class DefectError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace xorban
