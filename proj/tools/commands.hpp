#pragma once

#include "json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace enriques::cli {

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t cap = 1'000'000;
  std::optional<std::string> fixtures;
  bool timing = false;
};

struct Verdict {
  std::string name;
  bool value = false;
};

struct Report {
  std::vector<Verdict> verdicts;
  Json payload = Json::object();
  std::vector<std::string> text;  // text-mode lines; the payload is printed when empty
};

/// Collects every input that determines the result, for inputs_digest.
class Inputs {
 public:
  void add(const std::string& key, const std::string& value);
  Json file(const std::string& key, const std::string& path);
  std::string digest() const;

 private:
  std::string canonical_;
};

struct VerifyEmbeddingArgs { std::string file; };
struct TheoremAArgs { int rho = 20; std::string params; std::optional<std::string> label; };
struct BrauerImageArgs { int rho = 20; std::string params; };
struct LatticeSource { std::optional<std::string> gram; std::optional<std::string> file; };
struct RootsArgs { LatticeSource lattice; std::int64_t norm = -2; };
struct NikulinArgs { std::string sig; std::optional<std::string> fqf; std::optional<std::string> lattice; };
struct StarArgs { std::string lattice; std::string sublattice; };
struct SublatticeArgs { std::string p; std::string lattice; };
struct TransferArgs {
  std::string direction;
  std::string lattice;
  std::string sublattice;
  std::optional<std::string> datum;
  std::optional<std::string> embedding;
};
struct ClassGroupArgs { std::int64_t disc = 0; };
struct TheoremCArgs { std::string gram; };
struct EpsilonArgs { std::string vector; };
struct StandardLatticeArgs { std::string name; };
struct AcceptArgs { std::string suite = "all"; };

Report verify_embedding(const VerifyEmbeddingArgs& a, Inputs& in);
Report theorem_a(const TheoremAArgs& a, Inputs& in);
Report brauer_image(const BrauerImageArgs& a, Inputs& in);
Report im_phi_bound(const LatticeSource& a, Inputs& in);
Report roots(const RootsArgs& a, const GlobalOptions& g, Inputs& in);
Report nikulin_exists(const NikulinArgs& a, Inputs& in);
Report condition_star(const StarArgs& a, Inputs& in);
Report sublattice(const SublatticeArgs& a, Inputs& in);
Report transfer(const TransferArgs& a, Inputs& in);
Report class_group(const ClassGroupArgs& a, Inputs& in);
Report theorem_c(const TheoremCArgs& a, Inputs& in);
Report epsilon(const EpsilonArgs& a, Inputs& in);
Report standard_lattice(const StandardLatticeArgs& a, Inputs& in);
Report accept(const AcceptArgs& a, const GlobalOptions& g, Inputs& in);

}  // namespace enriques::cli
