#include "fracterm/shape_id.hpp"

#include <string>

#include "fracterm/error.hpp"

namespace fracterm {

std::string_view to_string(ShapeId shape) {
  switch (shape) {
    case ShapeId::nat_dec: return "nat.dec";
    case ShapeId::nat_sdn: return "nat.sdn";
    case ShapeId::nat_dedekind: return "nat.dedekind";
    case ShapeId::nat_vn: return "nat.vn";
    case ShapeId::nat_zermelo: return "nat.zermelo";
    case ShapeId::int_signed: return "int.signed";
    case ShapeId::int_diffpair: return "int.diffpair";
    case ShapeId::rat_pcs: return "rat.pcs";
    case ShapeId::rat_ssft: return "rat.ssft";
    case ShapeId::rat_rns: return "rat.rns";
  }
  return "?";
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::nat: return "nat";
    case Label::integer: return "int";
    case Label::rat: return "rat";
  }
  return "?";
}

ShapeId parse_shape_id(std::string_view id) {
  for (ShapeId s : kAllShapes) {
    if (to_string(s) == id) return s;
  }
  if (id.rfind("real", 0) == 0 || id.rfind("complex", 0) == 0) {
    throw Error(ErrorKind::unsupported_shape,
                "shape '" + std::string(id) + "' involves infinite objects and is not supported");
  }
  throw Error(ErrorKind::unsupported_shape, "unknown shape '" + std::string(id) + "'");
}

Label parse_label(std::string_view name) {
  if (name == "nat") return Label::nat;
  if (name == "int") return Label::integer;
  if (name == "rat") return Label::rat;
  if (name == "real" || name == "complex") {
    throw Error(ErrorKind::unsupported_shape, "label '" + std::string(name) + "' is not supported");
  }
  throw Error(ErrorKind::unsupported_shape, "unknown label '" + std::string(name) + "'");
}

Label label_of(ShapeId shape) {
  switch (shape) {
    case ShapeId::nat_dec:
    case ShapeId::nat_sdn:
    case ShapeId::nat_dedekind:
    case ShapeId::nat_vn:
    case ShapeId::nat_zermelo:
      return Label::nat;
    case ShapeId::int_signed:
    case ShapeId::int_diffpair:
      return Label::integer;
    case ShapeId::rat_pcs:
    case ShapeId::rat_ssft:
    case ShapeId::rat_rns:
      return Label::rat;
  }
  return Label::nat;
}

}  // namespace fracterm
