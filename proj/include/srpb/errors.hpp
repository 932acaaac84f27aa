#pragma once

#include <stdexcept>
#include <string>

namespace srpb {

// Operands live over different variable contexts or fields.
class ContextError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedRingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad vertex index, bad file, bad expression.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankUndefinedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied lifter returned data that does not reduce correctly.
class LifterContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity that holds by construction failed; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace srpb
