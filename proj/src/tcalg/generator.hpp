// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_GENERATOR_HPP
#define TCALG_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "tcalg/params.hpp"

namespace tcalg {

// Layer 0 is the base block (classes pulled back from the obstacle
// configuration space); layers 1..r are the per-snapshot fiber blocks.
inline constexpr int kBaseLayer = 0;

/// One multiplicative generator: the degree-(d-1) class attached to the
/// ordered pair of points (i, j), i < j, in a given layer.
struct Generator {
    std::int16_t layer = 0;
    std::int16_t i = 0;
    std::int16_t j = 0;

    bool is_base() const { return layer == kBaseLayer; }
    bool operator==(const Generator&) const = default;
};

// Canonical order: base block first, then fiber layers in increasing order;
// inside a block sort by (j, i). All signs are relative to this order.
inline bool generator_less(const Generator& a, const Generator& b) {
    if (a.layer != b.layer) return a.layer < b.layer;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

/// Validates indices and normalizes the layer: any class with j <= m is
/// independent of the layer and is stored as a base generator.
inline Generator make_generator(int layer, int i, int j, const Params& params) {
    params.validate();
    if (i < 1 || j <= i || j > params.points())
        fail_invalid("generator: need 1 <= i < j <= m+n, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " with " + params.describe());
    if (layer != kBaseLayer && (layer < 1 || layer > params.r))
        fail_invalid("generator: layer out of range 1..r, got l=" + std::to_string(layer));
    if (j <= params.m) {
        layer = kBaseLayer;
    } else if (layer == kBaseLayer) {
        fail_invalid("generator: class with j=" + std::to_string(j) + " > m=" +
                     std::to_string(params.m) + " lives in a fiber layer; give one");
    }
    return Generator{static_cast<std::int16_t>(layer), static_cast<std::int16_t>(i),
                     static_cast<std::int16_t>(j)};
}

// "w(i,j)" for base classes, "w[l](i,j)" for fiber classes.
inline std::string format_generator(const Generator& g) {
    std::string out = "w";
    if (!g.is_base()) out += "[" + std::to_string(g.layer) + "]";
    out += "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
    return out;
}

}  // namespace tcalg

#endif
