#include "commands.hpp"

#include "acceptance.hpp"

#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"
#include "enriques/short_vectors.hpp"
#include "enriques/theorem_a.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace enriques::cli {

namespace {

using std::int64_t;

std::string bool_text(bool b) { return b ? "true" : "false"; }

Lattice load_lattice(const LatticeSource& src, Inputs& in) {
  if (src.gram && src.file) fail(Errc::BadParams, "give either --gram or --gram-file");
  if (src.gram) {
    in.add("gram", *src.gram);
    return Lattice(parse_gram(*src.gram));
  }
  if (src.file) return lattice_from_json(in.file("gram-file", *src.file));
  fail(Errc::BadParams, "a lattice is required (--gram or --gram-file)");
}

IntMatrix load_basis(Inputs& in, const std::string& path, Index rank) {
  const Json j = in.file("sublattice", path);
  if (!j.is_object() || !j.contains("basis")) fail(Errc::Parse, "sublattice JSON needs a \"basis\" field");
  return matrix_from_columns(j.at("basis"), rank);
}

Json embedding_payload(const PrimitiveEmbedding& emb) {
  Json out = to_json(emb);
  out["label"] = pullback_epsilon(emb).to_string();
  const NComplement c = complement_in_n(emb);
  out["complement"] = lattice_report(c.lattice);
  out["complement_twice_even"] = is_twice_even(c.lattice);
  return out;
}

Json datum_check_json(const DatumCheck& c) {
  Json out;
  out["ok"] = c.ok();
  out["failures"] = c.failures;
  return out;
}

}  // namespace

void Inputs::add(const std::string& key, const std::string& value) {
  canonical_ += key;
  canonical_ += '=';
  canonical_ += value;
  canonical_ += '\n';
}

Json Inputs::file(const std::string& key, const std::string& path) {
  const Json j = read_json_file(path);
  add(key, j.dump());
  return j;
}

std::string Inputs::digest() const { return cli::digest(canonical_); }

Report verify_embedding(const VerifyEmbeddingArgs& a, Inputs& in) {
  const Json j = in.file("embedding", a.file);
  if (!j.is_object() || !j.contains("source_gram") || !j.contains("images"))
    fail(Errc::Parse, "embedding JSON needs \"source_gram\" and \"images\"");
  const Lattice source(matrix_from_rows(j.at("source_gram")));
  const IntMatrix images = matrix_from_columns(j.at("images"), 12);

  Report r;
  bool gram_exact = true, primitive = true;
  try {
    const PrimitiveEmbedding emb = embedding_from_images(source, images);
    r.payload = embedding_payload(emb);
  } catch (const Error& e) {
    if (e.code() == Errc::GramMismatch) {
      gram_exact = primitive = false;
    } else if (e.code() == Errc::NotPrimitive) {
      primitive = false;
    } else {
      throw;
    }
    r.payload["error"] = e.what();
  }
  r.verdicts = {{"gram_exact", gram_exact}, {"primitive", primitive}};
  if (gram_exact && primitive) {
    r.verdicts.push_back({"complement_twice_even", r.payload["complement_twice_even"].get<bool>()});
    r.text.push_back("label " + r.payload["label"].get<std::string>());
  } else {
    r.text.push_back(r.payload["error"].get<std::string>());
  }
  return r;
}

Report theorem_a(const TheoremAArgs& a, Inputs& in) {
  in.add("rho", std::to_string(a.rho));
  in.add("params", a.params);
  const Params params = parse_int_list(a.params);
  std::vector<Character> labels;
  if (a.label) {
    in.add("label", *a.label);
    labels.push_back(parse_character(*a.label));
  } else {
    labels = theorem_a_labels(a.rho);
  }

  Report r;
  r.payload["lattice"] = lattice_report(theorem_a_lattice(a.rho, params));
  Json list = Json::array();
  bool all_match = true, all_twice_even = true;
  for (const Character& label : labels) {
    const PrimitiveEmbedding emb = theorem_a_embedding(a.rho, params, label);
    Json e = embedding_payload(emb);
    const bool match = e["label"].get<std::string>() == label.to_string();
    all_match = all_match && match;
    all_twice_even = all_twice_even && e["complement_twice_even"].get<bool>();
    r.text.push_back("label " + label.to_string() + ": pullback " + e["label"].get<std::string>() +
                     ", complement twice-even " + bool_text(e["complement_twice_even"].get<bool>()));
    list.push_back(std::move(e));
  }
  if (a.label) {
    r.payload["embedding"] = list.front();
  } else {
    r.payload["embeddings"] = list;
  }
  r.verdicts = {{"validated", true}, {"label_matches", all_match}, {"complement_twice_even", all_twice_even}};
  return r;
}

Report brauer_image(const BrauerImageArgs& a, Inputs& in) {
  in.add("rho", std::to_string(a.rho));
  in.add("params", a.params);
  const std::vector<Character> image = brauer_image_kummer(a.rho, parse_int_list(a.params));
  const std::size_t expected = theorem_a_labels(a.rho).size();
  Report r;
  Json labels = Json::array();
  for (const Character& c : image) labels.push_back(c.to_string());
  r.payload["labels"] = labels;
  r.payload["count"] = image.size();
  r.payload["expected"] = expected;
  r.verdicts = {{"all_labels_reached", image.size() == expected}};
  r.text.push_back(std::to_string(image.size()) + " of " + std::to_string(expected) + " non-zero labels reached");
  return r;
}

Report im_phi_bound(const LatticeSource& a, Inputs& in) {
  const CharacterSubspace s = im_phi_upper_bound(load_lattice(a, in));
  Report r;
  Json basis = Json::array();
  for (const Character& c : s.basis) basis.push_back(c.to_string());
  r.payload["ambient_rank"] = s.ambient_rank;
  r.payload["basis"] = basis;
  r.payload["size"] = s.size();
  r.payload["full"] = s.is_full();
  r.text.push_back("|bound| = " + std::to_string(s.size()) + " of " +
                   std::to_string(std::uint64_t{1} << s.ambient_rank));
  return r;
}

Report roots(const RootsArgs& a, const GlobalOptions& g, Inputs& in) {
  const Lattice l = load_lattice(a.lattice, in);
  in.add("norm", std::to_string(a.norm));
  in.add("cap", std::to_string(g.cap));
  const std::vector<IntVector> vs = vectors_of_norm(l, Integer(a.norm), g.cap);
  Report r;
  Json list = Json::array();
  for (const IntVector& v : vs) list.push_back(columns_to_json(IntMatrix(v)).front());
  r.payload["norm"] = a.norm;
  r.payload["count"] = vs.size();
  r.payload["vectors"] = list;
  r.text.push_back(std::to_string(vs.size()) + " vectors of norm " + std::to_string(a.norm));
  return r;
}

Report nikulin_exists(const NikulinArgs& a, Inputs& in) {
  in.add("sig", a.sig);
  const std::vector<int64_t> sig = parse_int_list(a.sig);
  if (sig.size() != 2 || sig[0] < 0 || sig[1] < 0) fail(Errc::BadParams, "--sig is t+,t-");
  if (a.fqf.has_value() == a.lattice.has_value()) fail(Errc::BadParams, "give exactly one of --fqf and --lattice");
  const FiniteQuadraticForm f =
      a.fqf ? fqf_from_json(in.file("fqf", *a.fqf)) : discriminant_form(lattice_from_json(in.file("lattice", *a.lattice)));
  const ExistenceReport e = existence_report(Signature{static_cast<int>(sig[0]), static_cast<int>(sig[1])}, f);
  Report r;
  r.verdicts = {{"signature_congruence", e.signature_congruence},
                {"rank_bound", e.rank_bound},
                {"odd_discriminants", e.odd_discriminants},
                {"two_adic_discriminant", e.two_adic_discriminant},
                {"exists", e.holds()}};
  r.payload["form"] = to_json(f);
  r.payload["failures"] = e.failures;
  r.text.push_back(e.holds() ? "an even lattice with these invariants exists" : "no even lattice exists");
  for (const std::string& s : e.failures) r.text.push_back("  " + s);
  return r;
}

Report condition_star(const StarArgs& a, Inputs& in) {
  const Lattice l = lattice_from_json(in.file("lattice", a.lattice));
  const IntMatrix basis = load_basis(in, a.sublattice, l.rank());
  const StarReport s = enriques::condition_star(l, basis);
  Report r;
  r.verdicts = {{"index_prime_to_2discr", s.gcd_ok}, {"length_bounds", s.ell_bounds_ok}, {"condition_star", s.verdict()}};
  r.payload["index"] = to_json(s.index);
  Json w = Json::array();
  for (const PrimeLength& p : s.witness_primes) w.push_back({{"prime", p.prime}, {"length", p.length}});
  r.payload["new_primes"] = w;
  r.payload["sublattice"] = lattice_report(sublattice_from_gram_change(l, basis).lattice);
  r.text.push_back("index " + s.index.to_string() + ", condition (*) " + bool_text(s.verdict()));
  return r;
}

Report sublattice(const SublatticeArgs& a, Inputs& in) {
  in.add("p", a.p);
  const Lattice l = lattice_from_json(in.file("lattice", a.lattice));
  const std::vector<IndexPSublattice> chain = index_p_chain(l, parse_int_list(a.p));
  Report r;
  Json steps = Json::array();
  for (const IndexPSublattice& s : chain) {
    Json step;
    step["basis"] = columns_to_json(s.sub.basis);
    step["gram"] = rows_to_json(s.sub.lattice.gram());
    step["index"] = to_json(s.sub.index);
    step["pivot"] = columns_to_json(IntMatrix(s.pivot)).front();
    step["lattice"] = lattice_report(s.sub.lattice);
    r.text.push_back("index " + s.sub.index.to_string() + ", discr " + s.sub.lattice.determinant().to_string());
    steps.push_back(std::move(step));
  }
  r.payload["steps"] = steps;
  return r;
}

Report transfer(const TransferArgs& a, Inputs& in) {
  in.add("direction", a.direction);
  if (a.direction != "down" && a.direction != "up") fail(Errc::BadParams, "--direction is down or up");
  if (a.datum.has_value() == a.embedding.has_value()) fail(Errc::BadParams, "give exactly one of --datum and --embedding");
  const Lattice l = lattice_from_json(in.file("lattice", a.lattice));
  const IntMatrix basis = load_basis(in, a.sublattice, l.rank());
  const Lattice sub = sublattice_from_gram_change(l, basis).lattice;
  const Lattice& source = a.direction == "down" ? l : sub;
  const Lattice& target = a.direction == "down" ? sub : l;

  EmbeddingDatum d;
  if (a.embedding) {
    const PrimitiveEmbedding emb = embedding_from_json(in.file("embedding", *a.embedding));
    if (!(emb.source == source)) fail(Errc::BadParams, "the embedding's source is not the lattice being transferred");
    d = datum_from_embedding(emb);
  } else {
    d = datum_from_json(in.file("datum", *a.datum), source);
  }

  Report r;
  r.payload["source"] = lattice_report(source);
  r.payload["target"] = lattice_report(target);
  r.payload["input_check"] = datum_check_json(check_embedding_datum(source, d));
  try {
    const EmbeddingDatum out =
        a.direction == "down" ? transfer_datum_down(l, basis, d) : transfer_datum_up(l, basis, d);
    const DatumCheck c = check_embedding_datum(target, out);
    r.payload["datum"] = to_json(out);
    r.payload["check"] = datum_check_json(c);
    r.verdicts = {{"transferred", true}, {"datum_verified", c.ok()}};
    r.text.push_back("|A_K| " + d.k.form.order().to_string() + " -> " + out.k.form.order().to_string() +
                     ", datum verified " + bool_text(c.ok()));
  } catch (const Error& e) {
    if (e.code() != Errc::StarViolated && e.code() != Errc::ExistenceFails && e.code() != Errc::DatumInvalid) throw;
    r.payload["error"] = e.what();
    r.verdicts = {{"transferred", false}};
    r.text.push_back(e.what());
  }
  return r;
}

Report class_group(const ClassGroupArgs& a, Inputs& in) {
  in.add("D", std::to_string(a.disc));
  const ClassGroupData g = enriques::class_group(a.disc);
  Report r;
  Json forms = Json::array();
  for (const BinaryForm& f : g.reduced_forms) forms.push_back(to_json(f));
  r.payload["discriminant"] = g.discriminant;
  r.payload["class_number"] = g.class_number;
  r.payload["reduced_forms"] = forms;
  r.payload["ambiguous_count"] = g.ambiguous_count;
  r.payload["two"] = std::string(behavior_name(prime2_splitting(a.disc)));
  r.payload["ray_class_order_mod_2"] = ray_class2_order(a.disc);
  r.text.push_back("h = " + std::to_string(g.class_number));
  for (const BinaryForm& f : g.reduced_forms)
    r.text.push_back("  (" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " + std::to_string(f.c) + ")");
  return r;
}

Report theorem_c(const TheoremCArgs& a, Inputs& in) {
  in.add("gram", a.gram);
  const TheoremCReport t = theorem_c_report(parse_gram(a.gram));
  Report r;
  r.payload["form"] = to_json(t.form);
  r.payload["d"] = t.d;
  r.payload["conductor"] = t.conductor;
  r.payload["fundamental"] = t.fundamental;
  r.payload["end_is_maximal"] = t.end_is_maximal;
  r.payload["two"] = std::string(behavior_name(t.two_behavior));
  r.payload["applies"] = t.applies;
  r.payload["index_k2_k1"] = t.index_k2_k1 ? Json(*t.index_k2_k1) : Json(nullptr);
  r.payload["notes"] = t.notes;
  r.text.push_back("d = " + std::to_string(t.d) + ", f = " + std::to_string(t.conductor) +
                   ", D = " + std::to_string(t.fundamental) + ", 2 " + std::string(behavior_name(t.two_behavior)));
  r.text.push_back("applies " + bool_text(t.applies) +
                   (t.index_k2_k1 ? ", [k2 : k1] = " + std::to_string(*t.index_k2_k1) : std::string()));
  for (const std::string& n : t.notes) r.text.push_back("  " + n);
  return r;
}

Report epsilon(const EpsilonArgs& a, Inputs& in) {
  in.add("vector", a.vector);
  const std::vector<int64_t> v = parse_int_list(a.vector);
  IntVector x(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Index>(i)) = Integer(v[i]);
  const int e = enriques::epsilon(x);
  Report r;
  r.payload["epsilon"] = e;
  r.payload["norm"] = x.size() == 12 ? to_json(enriques_lattice().norm(x)) : Json(nullptr);
  r.text.push_back(std::to_string(e));
  return r;
}

Report standard_lattice(const StandardLatticeArgs& a, Inputs& in) {
  in.add("name", a.name);
  const Lattice l = enriques::standard_lattice(a.name);
  Report r;
  r.payload["name"] = a.name;
  r.payload["gram"] = rows_to_json(l.gram());
  r.payload["lattice"] = lattice_report(l);
  for (Index i = 0; i < l.rank(); ++i) {
    std::ostringstream row;
    for (Index j = 0; j < l.rank(); ++j) row << (j ? " " : "") << std::setw(3) << l.gram()(i, j);
    r.text.push_back(row.str());
  }
  return r;
}

Report accept(const AcceptArgs& a, const GlobalOptions& g, Inputs& in) {
  in.add("suite", a.suite);
  in.add("seed", std::to_string(g.seed));
  acceptance::Fixtures fixtures;
  if (g.fixtures) {
    in.add("fixtures", *g.fixtures);
    fixtures = acceptance::load_fixtures(*g.fixtures);
  }
  Report r;
  Json list = Json::array();
  for (const acceptance::CriterionResult& c : acceptance::run_suite(a.suite, g.seed, fixtures)) {
    r.verdicts.push_back({std::to_string(c.id) + " " + c.name, c.passed});
    Json item = {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail},
                 {"budget_seconds", c.budget_seconds}};
    if (g.timing) item["seconds"] = c.seconds;
    list.push_back(std::move(item));
    r.text.push_back(acceptance::format_line(c));
  }
  r.payload["suite"] = a.suite;
  r.payload["criteria"] = list;
  return r;
}

}  // namespace enriques::cli
