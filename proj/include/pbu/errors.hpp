#pragma once

#include <stdexcept>
#include <string>

namespace pbu {

// Position inside a bundle document or expression (1-based).
struct SourcePos {
    int line = 0;
    int column = 0;
};

// Structural problem: malformed document or expression text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourcePos pos, std::string path = "")
        : std::runtime_error(msg), pos_(pos), path_(std::move(path)) {}

    SourcePos pos() const { return pos_; }
    const std::string& path() const { return path_; }

    std::string describe() const {
        std::string s = "parse error";
        if (pos_.line > 0) {
            s += " at line " + std::to_string(pos_.line) + ", column " + std::to_string(pos_.column);
        }
        if (!path_.empty()) s += " (" + path_ + ")";
        s += ": ";
        s += what();
        return s;
    }

private:
    SourcePos pos_;
    std::string path_;
};

// Semantic problem: well-formed input that violates a model invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg, std::string path = "")
        : std::runtime_error(msg), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

    std::string describe() const {
        std::string s = "validation error";
        if (!path_.empty()) s += " (" + path_ + ")";
        s += ": ";
        s += what();
        return s;
    }

private:
    std::string path_;
};

} // namespace pbu
