#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sloped_width {

/**
 * One connected piece of a decomposing surface, recorded by its genus
 * and its number of boundary circles. Embedding data is not modeled;
 * the calculus only needs these two counts.
 */
class SurfaceComponent {
public:
    SurfaceComponent(int genus, int boundary) : genus_(genus), boundary_(boundary) {
        if (genus < 0 || boundary < 0)
            throw std::invalid_argument("SurfaceComponent: negative genus or boundary count");
    }

    int genus() const { return genus_; }
    int boundary() const { return boundary_; }
    bool is_sphere() const { return genus_ == 0 && boundary_ == 0; }

    // c = 1 - chi + g = 3g + b - 1, with the sphere pinned to 0.
    long long complexity() const {
        if (is_sphere()) return 0;
        return 3LL * genus_ + boundary_ - 1;
    }

    // Complexity after capping every boundary circle with a disk.
    long long capped_complexity() const {
        if (genus_ == 0) return 0;
        return 3LL * genus_ - 1;
    }

    friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
    friend auto operator<=>(const SurfaceComponent&, const SurfaceComponent&) = default;

private:
    int genus_;
    int boundary_;
};

/**
 * A possibly empty, possibly disconnected surface: an unordered multiset
 * of components. Components are kept sorted so that equal multisets
 * compare equal. Complexity sums over components; the empty surface has
 * complexity 0.
 */
class Surface {
public:
    Surface() = default;
    Surface(std::initializer_list<SurfaceComponent> comps) : components_(comps) {
        canonicalize();
    }
    explicit Surface(std::vector<SurfaceComponent> comps) : components_(std::move(comps)) {
        canonicalize();
    }

    const std::vector<SurfaceComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    bool empty() const { return components_.empty(); }

    long long complexity() const {
        long long total = 0;
        for (const auto& c : components_) total += c.complexity();
        return total;
    }

    long long capped_complexity() const {
        long long total = 0;
        for (const auto& c : components_) total += c.capped_complexity();
        return total;
    }

    int total_boundary() const {
        int total = 0;
        for (const auto& c : components_) total += c.boundary();
        return total;
    }

    int total_genus() const {
        int total = 0;
        for (const auto& c : components_) total += c.genus();
        return total;
    }

    bool is_closed() const { return total_boundary() == 0; }

    bool all_planar() const {
        return std::all_of(components_.begin(), components_.end(),
                           [](const SurfaceComponent& c) { return c.genus() == 0; });
    }

    bool has_sphere() const {
        return std::any_of(components_.begin(), components_.end(),
                           [](const SurfaceComponent& c) { return c.is_sphere(); });
    }

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    void canonicalize() {
        std::sort(components_.begin(), components_.end(),
                  [](const SurfaceComponent& a, const SurfaceComponent& b) { return b < a; });
    }

    std::vector<SurfaceComponent> components_;
};

/// Joins two boundary circles of one component by an annulus in the
/// boundary torus: (g, b) becomes (g+1, b-2). Raises that component's
/// complexity by exactly 1.
inline Surface tube_same_component(const Surface& s, std::size_t index) {
    const auto& comps = s.components();
    if (index >= comps.size())
        throw std::invalid_argument("tube_same_component: component index out of range");
    if (comps[index].boundary() < 2)
        throw std::domain_error("tube_same_component: component needs at least two boundary circles");
    std::vector<SurfaceComponent> out = comps;
    out[index] = SurfaceComponent(comps[index].genus() + 1, comps[index].boundary() - 2);
    return Surface(std::move(out));
}

/// Joins a boundary circle of one component to a boundary circle of
/// another: (g1,b1), (g2,b2) become (g1+g2, b1+b2-2). Lowers total
/// complexity by exactly 1 unless the result is a sphere.
inline Surface tube_merge(const Surface& s, std::size_t a, std::size_t b) {
    const auto& comps = s.components();
    if (a == b) throw std::invalid_argument("tube_merge: component selectors must differ");
    if (a >= comps.size() || b >= comps.size())
        throw std::invalid_argument("tube_merge: component index out of range");
    if (comps[a].boundary() < 1 || comps[b].boundary() < 1)
        throw std::domain_error("tube_merge: both components need boundary");
    std::vector<SurfaceComponent> out;
    out.reserve(comps.size() - 1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != a && i != b) out.push_back(comps[i]);
    out.emplace_back(comps[a].genus() + comps[b].genus(),
                     comps[a].boundary() + comps[b].boundary() - 2);
    return Surface(std::move(out));
}

/// Caps every boundary circle with a disk; genus is preserved.
inline Surface cap_off(const Surface& s) {
    std::vector<SurfaceComponent> out;
    out.reserve(s.size());
    for (const auto& c : s.components()) out.emplace_back(c.genus(), 0);
    return Surface(std::move(out));
}

}  // namespace sloped_width
