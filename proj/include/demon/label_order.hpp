#pragma once

#include <string_view>

namespace demon {

// Canonical ordering of external node labels. Labels made only of decimal
// digits compare numerically and sort before all other labels; everything
// else compares bytewise. Used wherever results must not depend on the
// order in which nodes were first seen.
bool label_less(std::string_view a, std::string_view b) noexcept;

struct LabelLess {
    bool operator()(std::string_view a, std::string_view b) const noexcept {
        return label_less(a, b);
    }
};

} // namespace demon
