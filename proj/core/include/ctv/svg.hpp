#pragma once

#include "ctv/certificate.hpp"
#include "ctv/family.hpp"

#include <string>

namespace ctv {

/// Deterministic SVG rendering of a planar family (d = 2 only; throws
/// std::invalid_argument otherwise). Members are colored by class. When a
/// certificate is given, the witness hyperplane (solid) or the separator
/// (dashed, with the two Radon sides emphasized) is drawn. Fixed 800x800
/// canvas, coordinates printed with 6 decimals, byte-stable per input.
std::string emit_svg(const ColoredFamily& family, const Certificate* cert = nullptr);

}  // namespace ctv
