#pragma once

#include <string>

#include "sr/errors.hpp"

namespace sr {

/// Coefficient field: characteristic 0 (exact rationals) or a prime p.
struct FieldSpec {
    int characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }

    static FieldSpec of_characteristic(int c) {
        if (c == 0) return rationals();
        if (c < 2) fail(errc::parameter_out_of_range, "field characteristic must be 0 or prime");
        for (int q = 2; static_cast<long long>(q) * q <= c; ++q)
            if (c % q == 0)
                fail(errc::parameter_out_of_range,
                     "field characteristic must be 0 or prime, got " + std::to_string(c));
        return FieldSpec{c};
    }

    bool is_rationals() const { return characteristic == 0; }

    std::string name() const {
        if (characteristic == 0) return "Q";
        return "F" + std::to_string(characteristic);
    }

    friend bool operator==(FieldSpec a, FieldSpec b) {
        return a.characteristic == b.characteristic;
    }
};

} // namespace sr
