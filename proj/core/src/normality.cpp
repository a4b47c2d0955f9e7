#include "fracterm/normality.hpp"

#include <string>

namespace fracterm {

namespace {

void add_pairs(std::vector<Instance>& out, unsigned bound, ShapeId shape) {
  const int b = static_cast<int>(bound);
  for (int den = 0; den <= b; ++den) {
    for (int num = -b; num <= b; ++num) {
      if (den == 0 && num != 0 && shape != ShapeId::rat_rns) continue;
      if (den < 0) continue;
      if (shape == ShapeId::rat_rns) {
        out.emplace_back(rn_make(num, den));
        if (den != 0) out.emplace_back(rn_make(num, -den));
        continue;
      }
      if (den == 0) {
        if (shape == ShapeId::rat_pcs) out.emplace_back(PairClass{0, 0});
        continue;
      }
      if (gcd(num, den) != 1) continue;
      out.push_back(encode_ratio(num, den, shape));
    }
  }
}

}  // namespace

std::vector<Instance> enumerate_instances(ShapeId shape, unsigned bound) {
  std::vector<Instance> out;
  switch (shape) {
    case ShapeId::nat_dec: {
      const std::size_t width = std::to_string(bound).size() + 2;
      for (unsigned v = 0; v <= bound; ++v) {
        const std::string digits = std::to_string(v);
        for (std::size_t len = digits.size(); len <= width; ++len) {
          out.emplace_back(DecimalNat{std::string(len - digits.size(), '0') + digits});
        }
      }
      break;
    }
    case ShapeId::nat_sdn:
    case ShapeId::nat_dedekind:
    case ShapeId::nat_vn:
    case ShapeId::nat_zermelo:
      for (unsigned v = 0; v <= bound; ++v) out.push_back(encode(v, shape));
      break;
    case ShapeId::int_signed: {
      const int b = static_cast<int>(bound);
      for (int v = -b; v <= b; ++v) out.push_back(encode(v, shape));
      break;
    }
    case ShapeId::int_diffpair:
      for (unsigned p = 0; p <= bound; ++p) {
        for (unsigned m = 0; m <= bound; ++m) {
          out.emplace_back(DiffPairInt{{std::to_string(p)}, {std::to_string(m)}});
        }
      }
      break;
    case ShapeId::rat_pcs:
    case ShapeId::rat_ssft:
    case ShapeId::rat_rns:
      add_pairs(out, bound, shape);
      break;
  }
  return out;
}

bool is_normality_witness(const Instance& i, const Instance& j) {
  return instance_eq(i, j) != label_eq(i, j);
}

NormalityReport check_normality(ShapeId shape, unsigned bound) {
  NormalityReport report;
  const auto domain = enumerate_instances(shape, bound);
  report.instances = domain.size();
  for (std::size_t j = 0; j < domain.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (is_normality_witness(domain[i], domain[j])) {
        report.normal = false;
        report.witness.emplace(domain[i], domain[j]);
        return report;
      }
    }
  }
  return report;
}

ShapeDescriptor describe(ShapeId shape, unsigned bound) {
  return {label_of(shape), shape, is_normal(shape, bound)};
}

}  // namespace fracterm
