#pragma once

#include <stdexcept>
#include <string>

namespace sullivan {

// Error categories map onto CLI exit codes:
//   input   -> 1 (bad files, bad syntax, bad flags)
//   precond -> 2 (operation preconditions violated by the data)
//   internal-> 3 (a verified identity failed to reduce; implementation bug)
enum class ErrorKind { Input, Precondition, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string name, const std::string& what)
        : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}
    ErrorKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line = 0, int col = 0)
        : Error(ErrorKind::Input, "SyntaxError", what), line(line), col(col) {}
    int line, col;
};

struct UnknownGenerator : Error {
    UnknownGenerator(const std::string& what, int line = 0)
        : Error(ErrorKind::Input, "UnknownGenerator", what), line(line) {}
    int line;
};

struct InhomogeneousRelation : Error {
    InhomogeneousRelation(const std::string& what, int line = 0)
        : Error(ErrorKind::Input, "InhomogeneousRelation", what), line(line) {}
    int line;
};

struct DuplicateGenerator : Error {
    DuplicateGenerator(const std::string& what, int line = 0)
        : Error(ErrorKind::Input, "DuplicateGenerator", what), line(line) {}
    int line;
};

struct MalformedPresentation : Error {
    explicit MalformedPresentation(const std::string& what)
        : Error(ErrorKind::Precondition, "MalformedPresentation", what) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& what)
        : Error(ErrorKind::Precondition, "DegreeOverflow", what) {}
};

struct NotSimplyConnected : Error {
    explicit NotSimplyConnected(const std::string& what)
        : Error(ErrorKind::Precondition, "NotSimplyConnected", what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what)
        : Error(ErrorKind::Precondition, "CapExceeded", what) {}
};

struct OddGenerator : Error {
    explicit OddGenerator(const std::string& what)
        : Error(ErrorKind::Precondition, "OddGenerator", what) {}
};

struct DualityViolation : Error {
    explicit DualityViolation(const std::string& what)
        : Error(ErrorKind::Precondition, "DualityViolation", what) {}
};

struct NotInCase_b : Error {
    explicit NotInCase_b(const std::string& what)
        : Error(ErrorKind::Precondition, "NotInCase_b", what) {}
};

struct MalformedRing : Error {
    explicit MalformedRing(const std::string& what)
        : Error(ErrorKind::Precondition, "MalformedRing", what) {}
};

struct ReductionMismatch : Error {
    explicit ReductionMismatch(const std::string& what)
        : Error(ErrorKind::Internal, "ReductionMismatch", what) {}
};

}  // namespace sullivan
