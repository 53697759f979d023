#pragma once

#include <string>
#include <vector>

#include "treepat/integer.hpp"

namespace treepat {

/// Truncated integer power series indexed by leaf count; coeff[n] = av(n).
struct PowerSeries {
    std::vector<Integer> coeff;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<Integer> c) : coeff(std::move(c)) {}

    std::size_t size() const { return coeff.size(); }
    const Integer& operator[](std::size_t n) const { return coeff[n]; }

    /// Comma-separated rendering, e.g. "0, 1, 0, 1, 0, 2".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (i) out += ", ";
            out += coeff[i].get_str();
        }
        return out;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

} // namespace treepat
