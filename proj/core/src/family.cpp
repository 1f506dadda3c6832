#include "pierce/family.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pierce {

namespace {

// Walks the colorful vertex tuples (one vertex index per member) in odometer
// order and hands each tuple of points to the visitor. Returns false when the
// visitor aborts.
template <typename Visitor>
bool for_each_colorful_tuple(const Family& family, Visitor&& visit) {
    const std::size_t k = family.members.size();
    std::vector<std::size_t> idx(k, 0);
    std::vector<Point> tuple(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) tuple[i] = family.members[i].vertices[idx[i]];
        if (!visit(tuple, idx)) return false;
        std::size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < family.members[pos].vertices.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) return true;
    }
}

void validate_family(const Family& family) {
    const int d = family.dimension;
    if (d < 1) raise(Errc::invalid_argument, "family dimension must be at least 1");
    if (family.members.size() != static_cast<std::size_t>(d) + 1) {
        raise(Errc::invalid_argument, "family needs exactly d+1 members");
    }
    for (const auto& m : family.members) {
        if (m.ambient_dimension() != d) raise(Errc::dimension_mismatch, "member ambient dimension");
    }
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            for (const auto& v : family.members[i].vertices) {
                const auto& w = family.members[j].vertices;
                if (std::find(w.begin(), w.end(), v) != w.end()) {
                    raise(Errc::invalid_argument, "members share a vertex");
                }
            }
        }
    }
}

std::vector<Point> all_vertices(const Family& family) {
    std::vector<Point> out;
    for (const auto& m : family.members) {
        out.insert(out.end(), m.vertices.begin(), m.vertices.end());
    }
    return out;
}

// Meets-the-closure test: the member's vertices must not lie strictly on one
// side of the hyperplane.
bool crosses_member(const OrientedHyperplane& h, const Simplex& member) {
    bool nonneg = false, nonpos = false;
    for (const auto& v : member.vertices) {
        const int s = h.side(v);
        if (s >= 0) nonneg = true;
        if (s <= 0) nonpos = true;
        if (nonneg && nonpos) return true;
    }
    return false;
}

}  // namespace

Family make_family(int dimension, std::vector<Simplex> members) {
    Family family{dimension, std::move(members)};
    validate_family(family);
    return family;
}

const char* family_class_name(FamilyClass c) noexcept {
    switch (c) {
        case FamilyClass::crossed: return "crossed";
        case FamilyClass::loose: return "loose";
        case FamilyClass::tight: return "tight";
    }
    return "?";
}

bool is_separated(const Family& family) {
    validate_family(family);
    // The scan never stops early: a zero orientation anywhere must surface as
    // DegenerateVertices even when a sign flip has already settled the answer.
    int common = 0;
    bool constant = true;
    for_each_colorful_tuple(family, [&](const std::vector<Point>& tuple, const auto&) {
        const int s = orientation(tuple);
        if (s == 0) raise(Errc::degenerate_vertices, "zero orientation in colorful tuple");
        if (common == 0) {
            common = s;
        } else if (s != common) {
            constant = false;
        }
        return true;
    });
    return constant;
}

namespace {

// Enumerates candidate tangent hyperplanes through one vertex of each member
// except `omit` and returns those valid for a separated family: every
// non-omitted member in the closed positive side (touching only at the
// support vertex, by genericity), the omitted member strictly negative.
std::vector<OrientedHyperplane> tangent_candidates(const Family& family, int omit) {
    const int d = family.dimension;
    std::vector<int> member_ids;
    for (int i = 0; i <= d; ++i) {
        if (i != omit) member_ids.push_back(i);
    }
    std::vector<OrientedHyperplane> found;
    std::vector<std::size_t> pick(member_ids.size(), 0);
    for (;;) {
        std::vector<Point> support;
        support.reserve(member_ids.size());
        for (std::size_t i = 0; i < member_ids.size(); ++i) {
            support.push_back(family.members[member_ids[i]].vertices[pick[i]]);
        }
        bool degenerate_support = false;
        OrientedHyperplane h;
        try {
            h = spanning_hyperplane(support);
        } catch (const Error& e) {
            if (e.code() != Errc::degenerate_support) throw;
            degenerate_support = true;
        }
        if (!degenerate_support) {
            bool ok = true;
            // Omitted member strictly on one side; flip to make it negative.
            int omit_side = 0;
            for (const auto& v : family.members[omit].vertices) {
                const int s = h.side(v);
                if (s == 0 || (omit_side != 0 && s != omit_side)) {
                    ok = false;
                    break;
                }
                omit_side = s;
            }
            if (ok && omit_side > 0) h = h.flipped();
            if (ok) {
                for (std::size_t i = 0; ok && i < member_ids.size(); ++i) {
                    const auto& member = family.members[member_ids[i]];
                    for (std::size_t vi = 0; vi < member.vertices.size(); ++vi) {
                        const int s = h.side(member.vertices[vi]);
                        if (vi == pick[i]) {
                            if (s != 0) {
                                ok = false;
                                break;
                            }
                        } else if (s <= 0) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) found.push_back(h.canonical());
            }
        }
        std::size_t pos = 0;
        while (pos < pick.size()) {
            if (++pick[pos] < family.members[member_ids[pos]].vertices.size()) break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size()) break;
    }
    std::sort(found.begin(), found.end(), [](const OrientedHyperplane& a, const OrientedHyperplane& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

OrientedHyperplane inner_tangent_unchecked(const Family& family, int omit) {
    auto candidates = tangent_candidates(family, omit);
    if (candidates.size() != 1) {
        raise(Errc::degenerate_vertices,
              "inner tangent not unique (" + std::to_string(candidates.size()) + " candidates)");
    }
    return candidates.front();
}

DeltaCell delta_cell_unchecked(const Family& family) {
    const int d = family.dimension;
    DeltaCell result;
    result.tangents.reserve(d + 1);
    for (int i = 0; i <= d; ++i) result.tangents.push_back(inner_tangent_unchecked(family, i));

    // The tangents split space into the member-side cell (all negative open
    // sides) and its opposite (all positive open sides); exactly one of
    // {bounded simplex + empty, both unbounded} occurs. Tightness is the
    // first case with the positive bundle empty.
    const bool positive_feasible = halfspaces_feasible(result.tangents, /*strict=*/true).feasible;
    if (!positive_feasible) {
        result.kind = DeltaKind::bounded_simplex;
        std::vector<Point> vertices;
        for (int i = 0; i <= d; ++i) {
            // Vertex opposite tangent i solves the other d tangent equations.
            Matrix a;
            std::vector<Rational> b;
            for (int j = 0; j <= d; ++j) {
                if (j == i) continue;
                a.push_back(result.tangents[j].normal);
                b.push_back(result.tangents[j].offset);
            }
            auto solved = solve_linear(std::move(a), std::move(b));
            if (!solved || !solved->unique) {
                raise(Errc::degenerate_vertices, "tangent intersection is degenerate");
            }
            if (result.tangents[i].side(solved->solution) >= 0) {
                raise(Errc::degenerate_vertices, "tangent cell vertex on the wrong side");
            }
            vertices.push_back(std::move(solved->solution));
        }
        result.cell = make_simplex(std::move(vertices), d);
        return result;
    }
    std::vector<OrientedHyperplane> flipped;
    flipped.reserve(result.tangents.size());
    for (const auto& h : result.tangents) flipped.push_back(h.flipped());
    const bool negative_feasible = halfspaces_feasible(flipped, /*strict=*/true).feasible;
    result.kind = negative_feasible ? DeltaKind::unbounded : DeltaKind::empty;
    return result;
}

}  // namespace

OrientedHyperplane inner_tangent(const Family& family, int omit) {
    validate_family(family);
    if (omit < 0 || omit > family.dimension) raise(Errc::index_out_of_range, "omit index");
    if (!is_separated(family)) raise(Errc::not_separated, "inner tangents need a separated family");
    return inner_tangent_unchecked(family, omit);
}

DeltaCell delta_cell(const Family& family) {
    if (!is_separated(family)) raise(Errc::not_separated, "tangent cell needs a separated family");
    return delta_cell_unchecked(family);
}

FamilyClass classify_family(const Family& family) {
    if (!is_separated(family)) return FamilyClass::crossed;
    return delta_cell_unchecked(family).kind == DeltaKind::bounded_simplex ? FamilyClass::tight
                                                                           : FamilyClass::loose;
}

ColorfulCore colorful_core_oracle(const Family& family) {
    validate_family(family);
    const int d = family.dimension;
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    ColorfulCore core;
    for_each_colorful_tuple(family, [&](const std::vector<Point>& tuple, const auto&) {
        // Facets of the closed simplex spanned by the tuple, oriented inward.
        for (int skip = 0; skip <= d; ++skip) {
            std::vector<Point> support;
            support.reserve(d);
            for (int i = 0; i <= d; ++i) {
                if (i != skip) support.push_back(tuple[i]);
            }
            OrientedHyperplane h = hyperplane_through(support, tuple[skip]).canonical();
            if (seen.emplace(h.normal, h.offset).second) core.halfspaces.push_back(h);
        }
        return true;
    });
    core.interior_nonempty = halfspaces_feasible(core.halfspaces, /*strict=*/true).feasible;
    return core;
}

std::optional<ColorfulWitness> pinned_with_witness(const Family& family, const Point& x) {
    validate_family(family);
    const int d = family.dimension;
    if (x.size() != static_cast<std::size_t>(d)) raise(Errc::dimension_mismatch, "query dimension");

    // Fast path: the query coincides with a member vertex.
    for (const auto& member : family.members) {
        for (const auto& v : member.vertices) {
            if (v == x) {
                ColorfulWitness witness;
                for (const auto& other : family.members) {
                    witness.member_points.push_back(&other == &member ? x : other.vertices.front());
                }
                return witness;
            }
        }
    }

    // x in conv(all vertices): lambda >= 0, sum lambda = 1, sum lambda v = x.
    std::vector<Point> vertices = all_vertices(family);
    const std::size_t n = vertices.size();
    std::vector<LinearConstraint> constraints;
    {
        LinearConstraint sum_row;
        sum_row.coeffs.assign(n, Rational(1));
        sum_row.rel = Rel::eq;
        sum_row.bound = 1;
        constraints.push_back(std::move(sum_row));
    }
    for (int row = 0; row < d; ++row) {
        LinearConstraint c;
        c.coeffs.reserve(n);
        for (const auto& v : vertices) c.coeffs.push_back(v[row]);
        c.rel = Rel::eq;
        c.bound = x[row];
        constraints.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < n; ++j) {
        LinearConstraint c;
        c.coeffs.assign(n, Rational(0));
        c.coeffs[j] = 1;
        c.rel = Rel::ge;
        c.bound = 0;
        constraints.push_back(std::move(c));
    }
    auto feasible = linear_feasible(constraints, static_cast<int>(n));
    if (!feasible.feasible) return std::nullopt;

    // Group the convex coefficients per member: x = sum_i m_i y_i with
    // m_i >= 0 summing to one and y_i inside member i.
    const auto& lambda = *feasible.witness;
    ColorfulWitness witness;
    std::size_t offset = 0;
    std::vector<Rational> mass;
    for (const auto& member : family.members) {
        Rational m(0);
        Point y(d, Rational(0));
        for (const auto& v : member.vertices) {
            const Rational& l = lambda[offset++];
            m += l;
            for (int c = 0; c < d; ++c) y[c] += l * v[c];
        }
        if (m > 0) {
            for (int c = 0; c < d; ++c) y[c] /= m;
        } else {
            y = member.vertices.front();
        }
        mass.push_back(m);
        witness.member_points.push_back(std::move(y));
    }
    // Exact verification: the grouped points reproduce x convexly.
    Rational total(0);
    Point recombined(d, Rational(0));
    for (std::size_t i = 0; i < witness.member_points.size(); ++i) {
        total += mass[i];
        for (int c = 0; c < d; ++c) recombined[c] += mass[i] * witness.member_points[i][c];
    }
    if (total != 1 || recombined != x) {
        raise(Errc::invalid_argument, "internal: pinned witness recombination failed");
    }
    return witness;
}

std::optional<VertexTransversal> transversal_through_vertices(const Family& family, bool require_crossed) {
    validate_family(family);
    const int d = family.dimension;
    std::vector<Point> vertices = all_vertices(family);
    std::vector<int> pick;
    std::optional<VertexTransversal> found;

    auto consider = [&](const std::vector<int>& support_idx) {
        std::vector<Point> support;
        support.reserve(d);
        for (int i : support_idx) support.push_back(vertices[i]);
        OrientedHyperplane h;
        try {
            h = spanning_hyperplane(support);
        } catch (const Error& e) {
            if (e.code() == Errc::degenerate_support) return false;
            throw;
        }
        for (const auto& member : family.members) {
            if (!crosses_member(h, member)) return false;
        }
        found = VertexTransversal{h, support};
        return true;
    };

    // All d-subsets of the vertex union.
    std::vector<int> stack;
    std::function<bool(std::size_t)> recurse = [&](std::size_t start) -> bool {
        if (stack.size() == static_cast<std::size_t>(d)) return consider(stack);
        for (std::size_t i = start; i < vertices.size(); ++i) {
            stack.push_back(static_cast<int>(i));
            if (recurse(i + 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    recurse(0);

    if (!found && require_crossed) {
        raise(Errc::no_transversal, "family is separated; no vertex transversal exists");
    }
    return found;
}

OrientedHyperplane crossing_hyperplane_through_point(const Family& family, const Point& x) {
    validate_family(family);
    const int d = family.dimension;
    if (d < 2) raise(Errc::not_loose, "no loose families exist in dimension 1");
    if (classify_family(family) != FamilyClass::loose) {
        raise(Errc::not_loose, "crossing hyperplane requires a loose family");
    }
    if (!pinned_with_witness(family, x)) {
        raise(Errc::not_pinned, "query point does not pin the family");
    }

    std::vector<Point> vertices = all_vertices(family);
    std::optional<OrientedHyperplane> best;
    std::vector<int> stack;
    std::function<bool(std::size_t)> recurse = [&](std::size_t start) -> bool {
        if (stack.size() == static_cast<std::size_t>(d) - 1) {
            std::vector<Point> support;
            support.push_back(x);
            for (int i : stack) support.push_back(vertices[i]);
            OrientedHyperplane h;
            try {
                h = spanning_hyperplane(support);
            } catch (const Error& e) {
                if (e.code() == Errc::degenerate_support) return false;
                throw;
            }
            int crossed = 0;
            for (const auto& member : family.members) {
                if (crosses_member(h, member)) ++crossed;
            }
            if (crossed >= d) {
                best = h;
                return true;
            }
            return false;
        }
        for (std::size_t i = start; i < vertices.size(); ++i) {
            stack.push_back(static_cast<int>(i));
            if (recurse(i + 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    recurse(0);
    if (!best) {
        raise(Errc::degenerate_vertices, "no vertex-supported crossing hyperplane found");
    }
    return *best;
}

}  // namespace pierce
