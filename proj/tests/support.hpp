// Shared fixtures and brute-force oracles for the test binaries.
#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qmod/degeneration.hpp"
#include "qmod/dsl.hpp"
#include "qmod/grass.hpp"
#include "qmod/stability.hpp"

namespace qmod::test {

/// A parsed document with its algebra and (if a top is given) projective
/// cover, kept at stable addresses.
struct World {
  InputDocument doc;
  std::unique_ptr<Algebra> alg;
  std::unique_ptr<ProjectiveCover> p;

  SubmodulePoint point(std::size_t i = 0) const { return doc_point(*p, doc.points.at(i)); }
  SubmodulePoint point_from(const std::string& gens) const;
  Rep module() const { return doc_module(*alg, *doc.module); }
};

std::unique_ptr<World> load(const std::string& text, const std::string& field = "");
std::unique_ptr<World> load_sample(const std::string& name, const std::string& field = "");
/// Same quiver and relations with a different top.
std::unique_ptr<World> with_top(const World& w, const TopSpec& top);
std::string read_file(const std::string& path);

/// Every subspace of F_q^n (n small), by brute force over spanning sets.
std::vector<Subspace> all_subspaces(const Field& f, std::size_t n);
/// Dimension vectors of submodules found by testing every subspace.
std::vector<DimVector> brute_submodule_dims(const Rep& m);
/// Every representation with dimension vector d over F_q satisfying the relations.
std::vector<Rep> all_reps(const Algebra& alg, const DimVector& d);
/// Random representation with dimension vector d satisfying the relations
/// (rejection sampling over a random chart point when needed).
Rep random_rep(const Algebra& alg, const DimVector& d, std::mt19937_64& rng, int attempts = 200);

/// A few small algebras used by the property suites (DSL text, field left to the caller).
std::vector<std::string> small_algebras();

/// Property suites shared with the acceptance binary; each returns the
/// number of failures and appends messages to `log`.
struct PropertyStats {
  std::size_t checked = 0, failures = 0;
  std::vector<std::string> log;
  void fail(const std::string& m) {
    ++failures;
    if (log.size() < 20) log.push_back(m);
  }
};
void chart_layering_property(PropertyStats& s, std::uint64_t seed, std::size_t min_points);
void submodule_oracle_property(PropertyStats& s, std::uint64_t seed);
void base_change_property(PropertyStats& s, std::uint64_t seed);
void chart_stability_property(PropertyStats& s, std::uint64_t seed);

}  // namespace qmod::test
