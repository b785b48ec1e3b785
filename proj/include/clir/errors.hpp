#pragma once

#include <stdexcept>
#include <string>

namespace clir {

// Exit code classes used by the CLI: 2 input/config, 3 resolution, 4 network.
enum class ErrorClass { Input = 2, Resolution = 3, Network = 4 };

// Base error. `name()` is the stable identifier printed by the CLI.
class ClirError : public std::runtime_error {
public:
    ClirError(std::string name, ErrorClass cls, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)), class_(cls) {}

    const std::string& name() const noexcept { return name_; }
    ErrorClass error_class() const noexcept { return class_; }
    int exit_code() const noexcept { return static_cast<int>(class_); }

private:
    std::string name_;
    ErrorClass class_;
};

struct ConfigError : ClirError {
    explicit ConfigError(const std::string& w) : ClirError("ConfigError", ErrorClass::Input, w) {}
};

struct ParseError : ClirError {
    explicit ParseError(const std::string& w) : ClirError("ParseError", ErrorClass::Input, w) {}
};

struct VersionMismatch : ClirError {
    explicit VersionMismatch(const std::string& w)
        : ClirError("VersionMismatch", ErrorClass::Input, w) {}
};

struct NoSourceArticle : ClirError {
    explicit NoSourceArticle(const std::string& w)
        : ClirError("NoSourceArticle", ErrorClass::Resolution, w) {}
};

struct NoTargetArticle : ClirError {
    explicit NoTargetArticle(const std::string& w)
        : ClirError("NoTargetArticle", ErrorClass::Resolution, w) {}
};

struct EmptyExtract : ClirError {
    explicit EmptyExtract(const std::string& w)
        : ClirError("EmptyExtract", ErrorClass::Resolution, w) {}
};

struct NetworkFailure : ClirError {
    explicit NetworkFailure(const std::string& w)
        : ClirError("NetworkFailure", ErrorClass::Network, w) {}
};

struct UnrecordedRequest : ClirError {
    explicit UnrecordedRequest(const std::string& w)
        : ClirError("UnrecordedRequest", ErrorClass::Network, w) {}
};

}  // namespace clir
