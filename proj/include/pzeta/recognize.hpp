#pragma once

#include <optional>

#include "pzeta/padic.hpp"

namespace pzeta {

// Reconstructs a rational n/d (|n|, d <= height_bound, p !| d) congruent to x
// mod p^(abs precision), when one exists of uniquely minimal height. Display
// helper only; never feeds back into computation.
std::optional<Rat> recognize_rational(const Padic& x, const Int& height_bound);

// Default bound floor(sqrt(p^absprec / 2)), the classical uniqueness regime.
std::optional<Rat> recognize_rational(const Padic& x);

}  // namespace pzeta
