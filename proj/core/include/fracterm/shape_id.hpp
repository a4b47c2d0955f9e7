#pragma once

#include <array>
#include <string_view>

namespace fracterm {

/// Kind of number, with no commitment to representation.
enum class Label { nat, integer, rat };

/// Concrete presentations of the numbers of a label.
enum class ShapeId {
  nat_dec,        // "nat.dec"       digit strings, leading zeroes allowed (subnormal)
  nat_sdn,        // "nat.sdn"       digit strings without redundant leading zeroes
  nat_dedekind,   // "nat.dedekind"  S^k(0)
  nat_vn,         // "nat.vn"        von Neumann sets
  nat_zermelo,    // "nat.zermelo"   Zermelo sets
  int_signed,     // "int.signed"    (+,a), (-,a) with a != 0, and 0
  int_diffpair,   // "int.diffpair"  raw difference pairs (a,b) of strict decimals
  rat_pcs,        // "rat.pcs"       pair classes, canonical member
  rat_ssft,       // "rat.ssft"      simplified simple fracterms
  rat_rns,        // "rat.rns"       ratio-numbers: raw integer pairs
};

inline constexpr std::array<ShapeId, 10> kAllShapes = {
    ShapeId::nat_dec,    ShapeId::nat_sdn,      ShapeId::nat_dedekind, ShapeId::nat_vn,
    ShapeId::nat_zermelo, ShapeId::int_signed,  ShapeId::int_diffpair, ShapeId::rat_pcs,
    ShapeId::rat_ssft,   ShapeId::rat_rns};

std::string_view to_string(ShapeId shape);
std::string_view to_string(Label label);

/// Throws Error(unsupported_shape) for unknown ids, including the recognised
/// but unsupported "real.*" and "complex.*" families.
ShapeId parse_shape_id(std::string_view id);

/// Accepts "nat", "int", "rat"; rejects "real" and "complex" as unsupported.
Label parse_label(std::string_view name);

Label label_of(ShapeId shape);

}  // namespace fracterm
