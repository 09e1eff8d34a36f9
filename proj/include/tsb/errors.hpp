#pragma once

#include <stdexcept>
#include <string>

namespace tsb {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// its exit-code contract: parse/validation -> 2, guard -> 3, disconnected -> 4.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bundled adjacency data could not be located or read.
struct DataFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tsb
