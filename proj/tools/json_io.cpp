#include "json_io.hpp"

#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace enriques::cli {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) fail(Errc::Parse, what);
}

Json rational_pair(const Rational& r) { return Json::array({to_json(r.num()), to_json(r.den())}); }

}  // namespace

Json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  expect(static_cast<bool>(in), "cannot open " + file.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(Errc::Parse, file.string() + ": " + e.what());
  }
}

Json to_json(const Integer& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  expect(j.is_string(), "expected an integer, got " + j.dump());
  return Integer::from_string(j.get<std::string>());
}

Json rows_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json columns_to_json(const IntMatrix& m) { return rows_to_json(IntMatrix(m.transpose())); }

Json columns_to_json(const ElementMatrix& m) {
  Json out = Json::array();
  for (Index j = 0; j < m.cols(); ++j) {
    Json col = Json::array();
    for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j));
    out.push_back(col);
  }
  return out;
}

IntMatrix matrix_from_rows(const Json& j) {
  expect(j.is_array(), "expected a list of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j.front().size()) : 0;
  IntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    expect(row.is_array() && static_cast<Index>(row.size()) == cols, "rows have different lengths");
    for (Index c = 0; c < cols; ++c) m(r, c) = integer_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

IntMatrix matrix_from_columns(const Json& j, Index height) {
  expect(j.is_array(), "expected a list of vectors");
  if (j.empty()) return IntMatrix(height, 0);
  return IntMatrix(matrix_from_rows(j).transpose());
}

ElementMatrix elements_from_columns(const Json& j, Index height) {
  const IntMatrix m = matrix_from_columns(j, height);
  ElementMatrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_int64();
  return out;
}

Lattice lattice_from_json(const Json& j) {
  expect(j.is_object() && j.contains("gram"), "lattice JSON needs a \"gram\" field");
  return Lattice(matrix_from_rows(j.at("gram")));
}

Json lattice_report(const Lattice& l) {
  Json out;
  out["rank"] = l.rank();
  out["signature"] = Json::array({l.signature().plus, l.signature().minus});
  out["even"] = l.is_even();
  out["discr"] = l.determinant().to_string();
  return out;
}

Json to_json(const FiniteQuadraticForm& f) {
  Json out;
  out["invariant_factors"] = f.factors();
  const RatMatrix q = f.q_matrix();
  Json rows = Json::array();
  for (Index i = 0; i < q.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < q.cols(); ++k) row.push_back(rational_pair(q(i, k)));
    rows.push_back(row);
  }
  out["q"] = rows;
  return out;
}

FiniteQuadraticForm fqf_from_json(const Json& j) {
  expect(j.is_object() && j.contains("invariant_factors") && j.contains("q"),
         "form JSON needs \"invariant_factors\" and \"q\"");
  const auto factors = j.at("invariant_factors").get<std::vector<std::int64_t>>();
  const Index n = static_cast<Index>(factors.size());
  const Json& rows = j.at("q");
  expect(rows.is_array() && static_cast<Index>(rows.size()) == n, "q must be square of the group's rank");
  RatMatrix q(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    expect(row.is_array() && static_cast<Index>(row.size()) == n, "q must be square of the group's rank");
    for (Index c = 0; c < n; ++c) {
      const Json& v = row[static_cast<std::size_t>(c)];
      expect(v.is_array() && v.size() == 2, "q entries are [numerator, denominator]");
      q(r, c) = Rational(integer_from_json(v[0]), integer_from_json(v[1]));
    }
  }
  return FiniteQuadraticForm(factors, q);
}

Json to_json(const PrimitiveEmbedding& emb) {
  Json out;
  out["source_gram"] = rows_to_json(emb.source.gram());
  out["images"] = columns_to_json(emb.images);
  return out;
}

PrimitiveEmbedding embedding_from_json(const Json& j) {
  expect(j.is_object() && j.contains("source_gram") && j.contains("images"),
         "embedding JSON needs \"source_gram\" and \"images\"");
  const Lattice source(matrix_from_rows(j.at("source_gram")));
  return embedding_from_images(source, matrix_from_columns(j.at("images"), 12));
}

Json to_json(const EmbeddingDatum& d) {
  Json k;
  k["rank"] = d.k.rank;
  k["signature"] = Json::array({d.k.signature.plus, d.k.signature.minus});
  k["form"] = to_json(d.k.form);
  Json out;
  out["h_l"] = columns_to_json(d.h_l);
  out["gamma"] = columns_to_json(d.gamma);
  out["k"] = k;
  out["delta"] = columns_to_json(d.delta.images);
  return out;
}

EmbeddingDatum datum_from_json(const Json& j, const Lattice& l) {
  expect(j.is_object() && j.contains("h_l") && j.contains("gamma") && j.contains("k") && j.contains("delta"),
         "datum JSON needs \"h_l\", \"gamma\", \"k\" and \"delta\"");
  const Index rl = discriminant_form(l).rank();
  const Index rn = discriminant_form(enriques_lattice()).rank();
  EmbeddingDatum d;
  d.h_l = elements_from_columns(j.at("h_l"), rl);
  d.gamma = elements_from_columns(j.at("gamma"), rn);
  const Json& k = j.at("k");
  const auto sig = k.at("signature").get<std::vector<int>>();
  expect(sig.size() == 2, "signature is [t+, t-]");
  d.k = KInvariants{k.at("rank").get<int>(), Signature{sig[0], sig[1]}, fqf_from_json(k.at("form"))};
  d.delta.images = elements_from_columns(j.at("delta"), datum_quotient(l, d).form().rank());
  return d;
}

Json to_json(const BinaryForm& f) { return Json::array({f.a, f.b, f.c}); }

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      expect(item.find_first_not_of(" ", used) == std::string::npos, "bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      fail(Errc::Parse, "bad integer '" + item + "' in '" + text + "'");
    }
  }
  expect(!out.empty(), "empty integer list");
  return out;
}

IntMatrix parse_gram(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(parse_int_list(row));
  expect(!rows.empty(), "empty Gram matrix");
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    expect(rows[r].size() == rows.front().size(), "Gram rows have different lengths");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = Integer(rows[r][c]);
  }
  return m;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace enriques::cli
