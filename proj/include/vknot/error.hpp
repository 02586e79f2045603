#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

enum class Errc {
    MalformedToken,
    UnmatchedLabel,
    SignConflict,
    DuplicateOccurrence,
    UnknownChord,
    InvalidPosition,
    InapplicableMove,
    InvalidSpec,
    ZeroK,
    EmptyMatrix,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MalformedToken: return "MalformedToken";
    case Errc::UnmatchedLabel: return "UnmatchedLabel";
    case Errc::SignConflict: return "SignConflict";
    case Errc::DuplicateOccurrence: return "DuplicateOccurrence";
    case Errc::UnknownChord: return "UnknownChord";
    case Errc::InvalidPosition: return "InvalidPosition";
    case Errc::InapplicableMove: return "InapplicableMove";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::ZeroK: return "ZeroK";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace vknot
