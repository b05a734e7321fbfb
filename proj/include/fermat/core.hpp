#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fermat {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text; `position` is a byte offset into the input.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ring_mismatch : error {
    ring_mismatch() : error("operands belong to different rings") {}
};

struct degree_cap_exceeded : error {
    explicit degree_cap_exceeded(int degree, int cap)
        : error("polynomial degree " + std::to_string(degree) +
                " exceeds cap " + std::to_string(cap) +
                " (override with FERMAT_MAX_DEGREE)") {}
};

struct not_divisible : error {
    not_divisible() : error("exact division failed: divisor does not divide dividend") {}
};

struct shape_error : error {
    using error::error;
};

struct not_member : error {
    not_member() : error("polynomial is not a member of the ideal") {}
};

struct non_stabilization : error {
    using error::error;
};

struct not_perfect_codim2 : error {
    using error::error;
};

/// A computation contradicted a claim the construction relies on.  Raised
/// instead of patching over the mismatch, so it can never pass silently.
struct paper_refuting : error {
    using error::error;
};

/// Degree cap for all polynomial products (FERMAT_MAX_DEGREE overrides).
inline int degree_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("FERMAT_MAX_DEGREE")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 128;
    }();
    return cap;
}

inline constexpr const char* tool_version = "0.1.0";

}  // namespace fermat
