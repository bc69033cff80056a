#pragma once

#include "ordcalc/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ordcalc::netamp {

enum class Dir : int { left = 0, right = 1 };

inline const char* to_string(Dir d) { return d == Dir::left ? "L" : "R"; }

inline Scalar i_power(unsigned k) {
    switch (k % 4) {
        case 0: return Scalar(1);
        case 1: return Scalar::i();
        case 2: return Scalar(-1);
        default: return -Scalar::i();
    }
}

// Amplitude table of the 1+1-dimensional lattice walk: a step moves one site
// in the current direction; keeping direction weighs 1 and reversing weighs i.
// The reversal factor attaches at the step that takes the new direction (the
// convention is pinned by equality with the path-sum oracle below). Support
// stays inside the light cone |x - x0| <= t.
class CheckerboardState {
public:
    CheckerboardState(int t_max, int x0, Dir d0) : t_max_(t_max), x0_(x0), d0_(d0) {
        if (t_max < 0) throw std::invalid_argument("CheckerboardState: negative t_max");
        layers_.resize(static_cast<std::size_t>(t_max) + 1);
        for (int t = 0; t <= t_max; ++t)
            layers_[static_cast<std::size_t>(t)].assign(2 * static_cast<std::size_t>(2 * t + 1),
                                                        Scalar());
        slot(0, x0, d0) = Scalar(1);
    }

    int t_max() const { return t_max_; }
    int x0() const { return x0_; }
    Dir d0() const { return d0_; }

    const Scalar& at(int t, int x, Dir d) const {
        static const Scalar zero;
        if (t < 0 || t > t_max_ || x < x0_ - t || x > x0_ + t) return zero;
        return layers_[static_cast<std::size_t>(t)]
                      [index(t, x, d)];
    }

    Scalar& slot(int t, int x, Dir d) { return layers_[static_cast<std::size_t>(t)][index(t, x, d)]; }

private:
    int t_max_;
    int x0_;
    Dir d0_;
    std::vector<std::vector<Scalar>> layers_;

    std::size_t index(int t, int x, Dir d) const {
        const std::size_t off = static_cast<std::size_t>(x - (x0_ - t));
        return off * 2 + static_cast<std::size_t>(d);
    }
};

inline CheckerboardState checkerboard_evolve(int t_max, int x0 = 0, Dir d0 = Dir::right) {
    CheckerboardState st(t_max, x0, d0);
    for (int t = 1; t <= t_max; ++t) {
        for (int x = x0 - t; x <= x0 + t; ++x) {
            // arriving while moving right comes from x-1; a reversal there
            // (previous direction left) contributes the factor i
            Scalar right = st.at(t - 1, x - 1, Dir::right) +
                           Scalar::i() * st.at(t - 1, x - 1, Dir::left);
            Scalar left = st.at(t - 1, x + 1, Dir::left) +
                          Scalar::i() * st.at(t - 1, x + 1, Dir::right);
            if (!right.is_zero()) st.slot(t, x, Dir::right) = std::move(right);
            if (!left.is_zero()) st.slot(t, x, Dir::left) = std::move(left);
        }
    }
    return st;
}

// Oracle: enumerate all 2^t direction sequences, weigh each path by i per
// direction reversal (counting a first step opposite to d0 as a reversal),
// and sum the ones matching the requested endpoint.
inline Scalar brute_force_path_sum(int t, int x0, Dir d0, int x_final, Dir d_final) {
    if (t < 0) throw std::invalid_argument("brute_force_path_sum: negative t");
    if (t > 20) throw std::length_error("brute_force_path_sum: 2^t enumeration too large");
    if (t == 0)
        return (x_final == x0 && d_final == d0) ? Scalar(1) : Scalar();
    Scalar total;
    const std::uint32_t n_paths = 1u << t;
    for (std::uint32_t bits = 0; bits < n_paths; ++bits) {
        int x = x0;
        Dir prev = d0;
        unsigned corners = 0;
        for (int s = 0; s < t; ++s) {
            const Dir dir = (bits >> s) & 1u ? Dir::right : Dir::left;
            if (dir != prev) ++corners;
            x += dir == Dir::right ? 1 : -1;
            prev = dir;
        }
        if (x == x_final && prev == d_final) total += i_power(corners);
    }
    return total;
}

}  // namespace ordcalc::netamp
