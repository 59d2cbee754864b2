#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace treelike {

// Exact half-integer stored as twice its value. Gromov products and every
// tree-likeness parameter live on the lattice (1/2)Z, so no floating point
// is needed anywhere.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
    static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }

    // Largest integer not above the value.
    constexpr std::int64_t floor() const {
        return doubled_ >= 0 ? doubled_ / 2 : -((-doubled_ + 1) / 2);
    }
    constexpr std::int64_t ceil() const { return -HalfInt(-doubled_).floor(); }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    constexpr HalfInt operator*(std::int64_t s) const { return HalfInt(doubled_ * s); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    // "2", "2.5", "-0.5"
    std::string to_string() const {
        std::string s;
        std::int64_t d = doubled_;
        if (d < 0) {
            s += '-';
            d = -d;
        }
        s += std::to_string(d / 2);
        if (d % 2 != 0) s += ".5";
        return s;
    }

private:
    constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
    std::int64_t doubled_ = 0;
};

constexpr HalfInt operator*(std::int64_t s, HalfInt h) { return h * s; }

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

}  // namespace treelike
