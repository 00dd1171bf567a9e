#pragma once

#include <stdexcept>
#include <string>

namespace pathcolor {

/// Precondition violated by the caller (missing edge, disconnected input, ...).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An illegal move was submitted to a game engine.
class GameRuleError : public std::logic_error {
public:
    GameRuleError(int round, std::string rule, const std::string& detail)
        : std::logic_error("round " + std::to_string(round) + ": " + rule + ": " + detail),
          round_(round), rule_(std::move(rule)) {}

    int round() const noexcept { return round_; }
    const std::string& rule() const noexcept { return rule_; }

private:
    int round_;
    std::string rule_;
};

}  // namespace pathcolor
