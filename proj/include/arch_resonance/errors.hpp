#pragma once

#include <stdexcept>
#include <string>

namespace arch_resonance {

// Base of every error thrown by the library. The CLI maps these to exit code 1,
// except UsageError which maps to 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error { public: using Error::Error; };
class MissingPreset : public Error { public: using Error::Error; };
class InvalidPreset : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class InvalidModel : public Error { public: using Error::Error; };
class DegenerateSegment : public Error { public: using Error::Error; };
class NoRootsInRange : public Error { public: using Error::Error; };
class InvalidSpec : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class UsageError : public Error { public: using Error::Error; };

}  // namespace arch_resonance
