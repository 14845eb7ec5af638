#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace indcomplex {

/// Homotopy type of a wedge of spheres as a multiset of sphere dimensions.
/// The empty multiset is the point. Dimension -1 (the empty complex) is
/// admitted only as an internal convention.
class WedgeOfSpheres {
public:
    WedgeOfSpheres() = default;

    static WedgeOfSpheres point() { return {}; }
    static WedgeOfSpheres sphere(int dim, std::uint64_t count = 1);

    bool is_point() const noexcept { return mult_.empty(); }
    const std::map<int, std::uint64_t>& multiplicities() const noexcept { return mult_; }
    std::uint64_t multiplicity(int dim) const;
    std::uint64_t total_spheres() const;
    std::optional<int> max_dimension() const;
    std::optional<int> min_dimension() const;

    /// Adds `count` copies of S^dim; count zero is a no-op.
    WedgeOfSpheres& add(int dim, std::uint64_t count = 1);
    WedgeOfSpheres& operator|=(const WedgeOfSpheres& other);

    /// Sigma^s: every dimension shifted up by s.
    WedgeOfSpheres suspend(int s) const;
    /// `copies` copies of this wedge wedged together.
    WedgeOfSpheres repeated(std::uint64_t copies) const;

    std::string to_string() const;

    friend WedgeOfSpheres operator|(WedgeOfSpheres a, const WedgeOfSpheres& b) { return a |= b; }
    friend bool operator==(const WedgeOfSpheres&, const WedgeOfSpheres&) = default;

private:
    std::map<int, std::uint64_t> mult_;
};

}  // namespace indcomplex
