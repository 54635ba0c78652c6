#pragma once

// Random and parametric inputs shared by the property suites.

#include <cstddef>
#include <optional>
#include <random>
#include <string>

#include "solk/intlin.hpp"
#include "solk/model.hpp"

namespace solk::testing {

using Rng = std::mt19937_64;

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5);

// Product of random elementary operations; determinant ±1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12);

// One attempt at a random presentation text with at most 3 vertices, 4 edges
// and image paths of length at most 4. Not necessarily valid.
std::string random_presentation_text(Rng& rng);

// Draws until a presentation validates with no findings at all (so it is
// primitive) and its germ model builds.
Presentation random_valid_presentation(Rng& rng);

// Circle cut into m edges with the degree-L covering map z -> z^L.
Presentation subdivided_circle(std::size_t m, std::size_t degree);

Presentation n_solenoid(std::size_t n);
Presentation load_data(const std::string& name);

}  // namespace solk::testing
