#pragma once

// Imaginary quadratic orders: reduced forms, conductors, the splitting of 2
// and the ray class group modulo 2.

#include "enriques/lattice.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enriques {

struct BinaryForm {
  std::int64_t a = 0, b = 0, c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// b = 0, a = b or a = c.
  bool is_ambiguous() const { return b == 0 || a == b || a == c; }
  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

struct ClassGroupData {
  std::int64_t discriminant = 0;
  std::vector<BinaryForm> reduced_forms;  // sorted by (a, b, c)
  std::int64_t class_number = 0;
  std::int64_t ambiguous_count = 0;
};

bool is_fundamental_discriminant(std::int64_t disc);

/// Throws NotImaginary or NotFundamental.
ClassGroupData class_group(std::int64_t disc);

struct FundamentalSplit {
  std::int64_t conductor = 1;
  std::int64_t fundamental = 0;
};

/// disc = f^2 D with D fundamental. Throws NotImaginary or BadCongruence.
FundamentalSplit fundamental_split(std::int64_t disc);

enum class TwoBehavior { Split, Inert, Ramified };

std::string_view behavior_name(TwoBehavior b);

/// Throws NotFundamental.
TwoBehavior prime2_splitting(std::int64_t disc);

/// |Cl_2(E)| = h |(O/2)^x| / |image of O^x|. Throws NotFundamental.
std::int64_t ray_class2_order(std::int64_t disc);

struct TheoremCReport {
  BinaryForm form;  // (a, b, c) of [[2a, b], [b, 2c]]
  std::int64_t d = 0;
  std::int64_t conductor = 1;
  std::int64_t fundamental = 0;
  bool end_is_maximal = false;
  TwoBehavior two_behavior = TwoBehavior::Split;
  bool applies = false;
  std::optional<std::int64_t> index_k2_k1;
  std::vector<std::string> notes;
};

/// Throws NotEvenGram or NotPositiveDefinite.
TheoremCReport theorem_c_report(const IntMatrix& gram);

}  // namespace enriques
