#pragma once

#include <stdexcept>
#include <string>

namespace geoclust {

// Error taxonomy; the CLI prints these as one line "error:<kind>: <message>".
class Error : public std::runtime_error {
public:
    enum class Kind { input, data, io, config };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

    const char* kind_name() const noexcept {
        switch (kind_) {
            case Kind::input: return "input_error";
            case Kind::data: return "data_error";
            case Kind::io: return "io_error";
            case Kind::config: return "config_error";
        }
        return "error";
    }

private:
    Kind kind_;
};

inline Error input_error(const std::string& msg) { return Error(Error::Kind::input, msg); }
inline Error data_error(const std::string& msg) { return Error(Error::Kind::data, msg); }
inline Error io_error(const std::string& msg) { return Error(Error::Kind::io, msg); }
inline Error config_error(const std::string& msg) { return Error(Error::Kind::config, msg); }

}  // namespace geoclust
