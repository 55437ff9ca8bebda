#pragma once

// JSON and text forms of the library types used by the command line tool.
// Vector lists (images, bases, generators) are lists of vectors; Gram
// matrices are lists of rows. Integers outside int64 are decimal strings.

#include "enriques/class_group.hpp"
#include "enriques/embedding.hpp"
#include "enriques/fqf.hpp"
#include "enriques/lattice.hpp"
#include "enriques/nikulin.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace enriques::cli {

using Json = nlohmann::ordered_json;

/// Throws Parse on unreadable or malformed files.
Json read_json_file(const std::filesystem::path& file);

Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json rows_to_json(const IntMatrix& m);
Json columns_to_json(const IntMatrix& m);
Json columns_to_json(const ElementMatrix& m);
IntMatrix matrix_from_rows(const Json& j);
/// Columns of the result are the listed vectors; `height` is used when the
/// list is empty.
IntMatrix matrix_from_columns(const Json& j, Index height);
ElementMatrix elements_from_columns(const Json& j, Index height);

Lattice lattice_from_json(const Json& j);
/// {"rank", "signature": [p, m], "even", "discr"}.
Json lattice_report(const Lattice& l);

Json to_json(const FiniteQuadraticForm& f);
FiniteQuadraticForm fqf_from_json(const Json& j);

Json to_json(const PrimitiveEmbedding& emb);
/// {"source_gram", "images"}; validates the embedding.
PrimitiveEmbedding embedding_from_json(const Json& j);

Json to_json(const EmbeddingDatum& d);
EmbeddingDatum datum_from_json(const Json& j, const Lattice& l);

Json to_json(const BinaryForm& f);

/// "1,0,-2" -> {1, 0, -2}. Throws Parse.
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// "2,1;1,10" -> [[2,1],[1,10]]. Throws Parse.
IntMatrix parse_gram(const std::string& text);

/// 64-bit FNV-1a, rendered as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& text);

}  // namespace enriques::cli
