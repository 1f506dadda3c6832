#pragma once

#include <string>

#include "pierce/rational.hpp"

namespace pierce {

// Tunable constants in one record. The asymptotic statements behind these
// leave their constants implicit, so every choice here is configuration with
// a documented default, overridable from a JSON file (unknown keys are
// rejected).
struct ToolkitConstants {
    // Factor c in the same-type partition budget r = ceil(c * k^(d^2)).
    Rational same_type_coefficient = Rational(1);

    // Factor c in the selection budget r = ceil(c * (1/density)^(d^4+d)).
    Rational selection_r_coefficient = Rational(1);

    // Base-case threshold for the selection recursion.
    int selection_base_threshold = 10;

    // Packing tolerance as a fraction of the class density: delta = eps_i/10.
    Rational packing_delta_fraction = Rational(1, 10);

    // Dyadic degree classes span [2^(i-1), 2^i) * eps * |V2| / dyadic_divisor.
    int dyadic_divisor = 10;

    // A restricted hyperedge counts as large when it has at least
    // mnet_large_edge_fraction * eps_i * |V2| vertices.
    Rational mnet_large_edge_fraction = Rational(4, 5);

    // Parts below mnet_keep_fraction * eps_i * |V2| are dropped from Mnets.
    Rational mnet_keep_fraction = Rational(1, 100);

    // Below this value of eps_i * |V2| the Mnet degrades to singletons.
    Rational mnet_singleton_threshold = Rational(8);

    // The pinning shrink eta starts at min inter-vertex distance / 2^shift.
    int pinning_eta_shift = 10;
};

const ToolkitConstants& default_constants();

// Parses a JSON object {"name": "p/q", ...} of overrides on top of the
// defaults. Unknown keys, malformed rationals, and out-of-range values raise
// ParseError.
ToolkitConstants load_constants(const std::string& json_text);
ToolkitConstants load_constants_file(const std::string& path);

}  // namespace pierce
