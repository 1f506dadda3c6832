#include "pierce/perturb.hpp"

#include "pierce/random.hpp"

namespace pierce {

PointSet perturb_general_position(const PointSet& input, std::uint64_t seed, const Rational& magnitude) {
    if (input.dimension <= 0) raise(Errc::dimension_mismatch, "positive dimension required");
    if (magnitude <= 0) raise(Errc::invalid_argument, "perturbation magnitude must be positive");
    for (const auto& p : input.points) {
        if (p.size() != static_cast<std::size_t>(input.dimension)) {
            raise(Errc::dimension_mismatch, "point dimension");
        }
    }

    Rational scale = magnitude;
    for (int round = 0; round < 32; ++round) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(round)));
        PointSet out;
        out.dimension = input.dimension;
        out.points.reserve(input.points.size());
        for (const auto& p : input.points) {
            Point q = p;
            for (auto& coord : q) coord += scale * rng.signed_unit(16);
            out.points.push_back(std::move(q));
        }
        if (verify_generic(out.points, out.dimension)) {
            out.generic = true;
            return out;
        }
        scale /= 2;
    }
    raise(Errc::retry_exhausted, "no generic perturbation found in 32 rounds");
}

}  // namespace pierce
