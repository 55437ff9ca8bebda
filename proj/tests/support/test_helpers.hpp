#pragma once

#include "enriques/errors.hpp"
#include "enriques/fqf.hpp"
#include "enriques/lattice.hpp"

#include <initializer_list>
#include <optional>

namespace enriques::testing {

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

inline IntVector vec(std::initializer_list<long> values) {
  IntVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = Integer(x);
  return v;
}

inline Element elem(std::initializer_list<long> values) {
  Element v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

/// The error code thrown by `f`, or nullopt when it returns normally.
template <typename F>
std::optional<Errc> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Rational rat(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

inline Lattice diag(std::initializer_list<long> values) {
  IntMatrix m = zeros<Integer>(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) {
    m(i, i) = Integer(x);
    ++i;
  }
  return Lattice(m);
}

}  // namespace enriques::testing
