#pragma once

#include <stdexcept>
#include <string>

namespace eigenrank {

/// Points awarded per game outcome. Requires win > draw >= loss >= 0.
struct ScoringScheme {
    double win;
    double draw;
    double loss;

    static ScoringScheme chess() { return {1.0, 0.5, 0.0}; }
    static ScoringScheme football() { return {3.0, 1.0, 0.0}; }

    /// Accepts "chess", "football", or "<win>,<draw>,<loss>".
    static ScoringScheme parse(const std::string& text);

    void validate() const {
        if (!(win > draw && draw >= loss && loss >= 0.0))
            throw std::invalid_argument("scoring scheme requires win > draw >= loss >= 0");
    }
};

}  // namespace eigenrank
