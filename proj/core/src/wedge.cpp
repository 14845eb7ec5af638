#include "indcomplex/wedge.hpp"

#include <stdexcept>

namespace indcomplex {

WedgeOfSpheres WedgeOfSpheres::sphere(int dim, std::uint64_t count) {
    WedgeOfSpheres w;
    w.add(dim, count);
    return w;
}

std::uint64_t WedgeOfSpheres::multiplicity(int dim) const {
    auto it = mult_.find(dim);
    return it == mult_.end() ? 0 : it->second;
}

std::uint64_t WedgeOfSpheres::total_spheres() const {
    std::uint64_t total = 0;
    for (const auto& [dim, count] : mult_) total += count;
    return total;
}

std::optional<int> WedgeOfSpheres::max_dimension() const {
    if (mult_.empty()) return std::nullopt;
    return mult_.rbegin()->first;
}

std::optional<int> WedgeOfSpheres::min_dimension() const {
    if (mult_.empty()) return std::nullopt;
    return mult_.begin()->first;
}

WedgeOfSpheres& WedgeOfSpheres::add(int dim, std::uint64_t count) {
    if (dim < -1) throw std::invalid_argument("sphere dimension must be >= -1");
    if (count != 0) mult_[dim] += count;
    return *this;
}

WedgeOfSpheres& WedgeOfSpheres::operator|=(const WedgeOfSpheres& other) {
    for (const auto& [dim, count] : other.mult_) add(dim, count);
    return *this;
}

WedgeOfSpheres WedgeOfSpheres::suspend(int s) const {
    WedgeOfSpheres out;
    for (const auto& [dim, count] : mult_) out.add(dim + s, count);
    return out;
}

WedgeOfSpheres WedgeOfSpheres::repeated(std::uint64_t copies) const {
    WedgeOfSpheres out;
    for (const auto& [dim, count] : mult_) out.add(dim, count * copies);
    return out;
}

std::string WedgeOfSpheres::to_string() const {
    if (mult_.empty()) return "pt";
    std::string out;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
        if (!out.empty()) out += " v ";
        if (it->second != 1) out += std::to_string(it->second) + "*";
        out += "S^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace indcomplex
