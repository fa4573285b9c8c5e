#pragma once

// Kernel invariants checked on sampled inputs, and the parser fuzz loop.
// Shared by the unit suite and the acceptance binary.

#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pgroup/dsl.hpp"
#include "pgroup/error.hpp"
#include "pgroup/kernel.hpp"

namespace properties {

using namespace pgroup;

class Failures {
 public:
  explicit Failures(std::string group) : group_(std::move(group)) {}
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) messages_.push_back(group_ + ": " + what);
  }
  const std::vector<std::string>& messages() const { return messages_; }
  std::size_t checked() const { return checked_; }

 private:
  std::string group_;
  std::vector<std::string> messages_;
  std::size_t checked_ = 0;
};

inline Subgroup random_subgroup(const Group& g, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  std::vector<Elem> seed;
  const int n = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < n; ++i) seed.push_back(pick(rng));
  return generated_subgroup(g, seed);
}

inline bool is_p_power(std::size_t n, unsigned p) { return log_p(n, p).has_value(); }

/// Runs every kernel invariant on `samples` random inputs.
inline Failures kernel_properties(const Group& g, unsigned seed, int samples = 12) {
  Failures f(g.name());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  const unsigned p = g.prime();
  const Subgroup s = whole_group(g);

  // Group axioms on sampled triples.
  for (int i = 0; i < 200; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    f.expect(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "associativity");
    f.expect(g.mul(a, g.inv(a)) == g.identity() && g.mul(g.identity(), a) == a, "identity and inverse");
    f.expect(g.pow(a, g.element_order(a)) == g.identity(), "element order annihilates");
    f.expect(is_p_power(g.element_order(a), p), "element order is a power of p");
  }

  const Subgroup z = center(g);
  f.expect(is_abelian(g, z) && is_normal(g, z), "center is abelian and normal");
  f.expect(!z.is_trivial() || g.order() == 1, "center of a nontrivial p-group is nontrivial");

  for (int i = 0; i < samples; ++i) {
    const Subgroup h = random_subgroup(g, rng);
    const Subgroup k = random_subgroup(g, rng);

    // Lagrange and closure.
    f.expect(g.order() % h.order() == 0 && is_p_power(h.order(), p), "Lagrange");
    for (int t = 0; t < 20; ++t) {
      const auto elems = h.elements();
      std::uniform_int_distribution<std::size_t> in_h(0, elems.size() - 1);
      const Elem x = elems[in_h(rng)], y = elems[in_h(rng)];
      f.expect(h.contains(g.mul(x, y)) && h.contains(g.inv(x)), "closure");
    }
    for (Elem x : h.gens()) f.expect(h.contains(x), "generators belong to the subgroup");

    // Centralizer and center containments.
    const Subgroup c = centralizer(g, h);
    f.expect(z.is_subgroup_of(c), "Z(G) <= C_G(H)");
    f.expect(center(g, h).is_subgroup_of(c), "Z(H) <= C_G(H)");
    f.expect(center(g, h) == meet(g, h, c), "Z(H) = H meet C_G(H)");
    f.expect(h.is_subgroup_of(centralizer(g, c)), "H <= C_G(C_G(H))");

    // Normal closure, join, meet.
    const Subgroup n = normal_closure(g, h);
    f.expect(h.is_subgroup_of(n) && is_normal(g, n), "normal closure contains H and is normal");
    const Subgroup hk = join(g, h, k);
    const Subgroup m = meet(g, h, k);
    f.expect(h.is_subgroup_of(hk) && k.is_subgroup_of(hk), "join is an upper bound");
    f.expect(m.is_subgroup_of(h) && m.is_subgroup_of(k), "meet is a lower bound");
    f.expect(hk.order() * m.order() >= h.order() * k.order(), "|HK| |H meet K| >= |H| |K|");

    // Commutators.
    f.expect(commutator_subgroup(g, h, k) == commutator_subgroup(g, k, h), "[H,K] = [K,H]");
    f.expect(commutator_subgroup(g, h, c).is_trivial(), "[H, C_G(H)] = 1");

    // Omega1.
    const Subgroup o = omega1(g, h);
    f.expect(o.is_subgroup_of(h), "Omega1(H) <= H");
    for (Elem x : o.gens()) f.expect(g.pow_p(x) == g.identity(), "Omega1 generators have order p");

    // Quotient order product and the projection homomorphism.
    if (g.order() / n.order() <= 4096) {
      const Quotient q = quotient(g, n);
      f.expect(q.group->order() * n.order() == g.order(), "|G/N| |N| = |G|");
      for (int t = 0; t < 20; ++t) {
        const Elem a = pick(rng), b = pick(rng);
        f.expect(q.projection[g.mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]),
                 "projection is a homomorphism");
      }
      f.expect(preimage(q, image(q, h)) == join(g, h, n), "preimage of image is HN");
    }
  }

  // Lower central series reaches 1 within log_p |G| steps, strictly decreasing.
  const unsigned bound = g.order() == 1 ? 1 : *log_p(g.order(), p);
  Subgroup prev = s;
  bool terminated = g.order() == 1;
  for (unsigned k = 1; k <= bound && !terminated; ++k) {
    const Subgroup cur = iterated_commutator(g, s, s, k);
    f.expect(cur.is_subgroup_of(prev) && (cur.order() < prev.order() || cur.is_trivial()),
             "lower central series decreases");
    f.expect(is_normal(g, cur), "lower central terms are normal");
    terminated = cur.is_trivial();
    prev = cur;
  }
  f.expect(terminated, "[G,G;k] = 1 for some k <= log_p |G|");
  return f;
}

struct FuzzResult {
  std::size_t inputs = 0;
  std::size_t parsed = 0;
  std::size_t rejected = 0;
  std::vector<std::string> crashes;
};

/// Feeds `raw` uniformly random byte strings, then `structured` strings built
/// from the grammar's characters and tokens, to the expression parser. Every
/// input must either parse or raise one of the typed parse errors; a parsed
/// input must survive a print/reparse round trip.
inline FuzzResult fuzz_parser(std::size_t raw, std::size_t structured, unsigned seed) {
  static constexpr char kAlphabet[] = "SZCJXOmegancljoinmetdrivdOrdIdx1()[],; 0123456789";
  static constexpr const char* kTokens[] = {"S",     "Z(",    "C(",       "J(",   "X(",    "X1(",
                                            "ncl(",  "join(", "meet(",    "Ord(", "Idx(",  "Omega1(",
                                            "derived(", "[",  "]",        ")",    ",",     ";2",
                                            ";0",    " ",     "S)",       "S,S"};
  FuzzResult r;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(0, 48);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<std::size_t> chr(0, sizeof(kAlphabet) - 2);
  std::uniform_int_distribution<std::size_t> tok(0, std::size(kTokens) - 1);
  for (std::size_t i = 0; i < raw + structured; ++i) {
    std::string s;
    const int n = len(rng);
    if (i < raw) {
      for (int k = 0; k < n; ++k) s += static_cast<char>(byte(rng));
    } else if (i % 2 == 0) {
      for (int k = 0; k < n; ++k) s += kAlphabet[chr(rng)];
    } else {
      for (int k = 0; k < n / 3; ++k) s += kTokens[tok(rng)];
    }
    ++r.inputs;
    try {
      const dsl::Expr e = dsl::parse_expr(s);
      ++r.parsed;
      if (!(dsl::parse_expr(dsl::to_string(e)) == e)) r.crashes.push_back("round trip: " + s);
    } catch (const dsl::ParseError&) {
      ++r.rejected;
    } catch (const dsl::ArityError&) {
      ++r.rejected;
    } catch (const std::exception& e) {
      r.crashes.push_back(std::string(e.what()) + " on input of length " + std::to_string(s.size()));
    }
  }
  return r;
}

}  // namespace properties
