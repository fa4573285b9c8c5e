#include "pgroup/corpus.hpp"

#include <limits>

#include "pgroup/error.hpp"
#include "pgroup/group_file.hpp"

namespace pgroup {

namespace {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_odd_prime(const GroupSpec& spec) {
  if (spec.p < 3 || !is_prime(spec.p))
    throw InvalidSpec(spec.name + ": p must be an odd prime, got " + std::to_string(spec.p));
}

Permutation cycle_on(std::size_t offset, std::size_t length, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i)
    images[offset + i] = static_cast<Point>(offset + (i + 1) % length);
  return Permutation(std::move(images));
}

// Upper unitriangular n x n matrices over F_p acting on the p^n column vectors;
// vector v is the point sum_k v_k p^k. Generators are I + E_{i,i+1}.
std::vector<Permutation> unitriangular_generators(unsigned n, unsigned p) {
  const std::size_t points = ipow(p, n);
  std::vector<Permutation> gens;
  for (unsigned row = 0; row + 1 < n; ++row) {
    std::vector<Point> images(points);
    const std::size_t row_w = ipow(p, row);
    const std::size_t next_w = ipow(p, row + 1);
    for (std::size_t v = 0; v < points; ++v) {
      const std::size_t vi = (v / row_w) % p;
      const std::size_t vj = (v / next_w) % p;
      const std::size_t wi = (vi + vj) % p;
      images[v] = static_cast<Point>(v - vi * row_w + wi * row_w);
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

std::size_t generator_degree(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::kCyclic: return ipow(spec.p, spec.n);
    case Family::kElemAbelian: return static_cast<std::size_t>(spec.p) * spec.n;
    case Family::kWreathCpCp: return ipow(spec.p, 2);
    case Family::kExtraspecialExpP: return ipow(spec.p, 3);
    case Family::kExtraspecialExpP2: return ipow(spec.p, 2);
    case Family::kUnitriangular: return ipow(spec.p, spec.n);
    case Family::kDirectProduct: {
      std::size_t d = 0;
      for (const auto& f : spec.factors) d += generator_degree(f);
      return d;
    }
    case Family::kFromFile: break;
  }
  throw InvalidSpec(spec.name + ": no generator degree for this family");
}

GroupSpec make(std::string name, Family f, unsigned p, unsigned n = 1) {
  GroupSpec s;
  s.name = std::move(name);
  s.family = f;
  s.p = p;
  s.n = n;
  return s;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::kCyclic: return "cyclic";
    case Family::kElemAbelian: return "elem_abelian";
    case Family::kDirectProduct: return "direct_product";
    case Family::kWreathCpCp: return "wreath_cpcp";
    case Family::kExtraspecialExpP: return "extraspecial_exp_p";
    case Family::kExtraspecialExpP2: return "extraspecial_exp_p2";
    case Family::kUnitriangular: return "unitriangular";
    case Family::kFromFile: return "from_file";
  }
  return "unknown";
}

std::optional<std::size_t> expected_order(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::kCyclic:
    case Family::kElemAbelian: return ipow(spec.p, spec.n);
    case Family::kWreathCpCp: return ipow(spec.p, spec.p + 1);
    case Family::kExtraspecialExpP:
    case Family::kExtraspecialExpP2: return ipow(spec.p, 3);
    case Family::kUnitriangular: return ipow(spec.p, spec.n * (spec.n - 1) / 2);
    case Family::kDirectProduct: {
      std::size_t order = 1;
      for (const auto& f : spec.factors) {
        auto o = expected_order(f);
        if (!o) return std::nullopt;
        order *= *o;
      }
      return order;
    }
    case Family::kFromFile: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Permutation> family_generators(const GroupSpec& spec) {
  if (spec.family != Family::kDirectProduct) require_odd_prime(spec);
  const unsigned p = spec.p;
  switch (spec.family) {
    case Family::kCyclic: {
      if (spec.n < 1) throw InvalidSpec(spec.name + ": cyclic needs n >= 1");
      const std::size_t d = ipow(p, spec.n);
      return {cycle_on(0, d, d)};
    }
    case Family::kElemAbelian: {
      if (spec.n < 1) throw InvalidSpec(spec.name + ": elem_abelian needs n >= 1");
      const std::size_t d = generator_degree(spec);
      std::vector<Permutation> gens;
      for (unsigned i = 0; i < spec.n; ++i) gens.push_back(cycle_on(i * p, p, d));
      return gens;
    }
    case Family::kWreathCpCp: {
      // Point i*p + j is coordinate j of block i.
      const std::size_t d = ipow(p, 2);
      std::vector<Point> top(d);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) top[i * p + j] = static_cast<Point>(((i + 1) % p) * p + j);
      return {cycle_on(0, p, d), Permutation(std::move(top))};
    }
    case Family::kExtraspecialExpP: return unitriangular_generators(3, p);
    case Family::kExtraspecialExpP2: {
      // x -> x + 1 and x -> (1 + p) x on the residues mod p^2.
      const std::size_t d = ipow(p, 2);
      std::vector<Point> shift(d), scale(d);
      for (std::size_t x = 0; x < d; ++x) {
        shift[x] = static_cast<Point>((x + 1) % d);
        scale[x] = static_cast<Point>(((1 + p) * x) % d);
      }
      return {Permutation(std::move(shift)), Permutation(std::move(scale))};
    }
    case Family::kUnitriangular:
      if (spec.n < 2) throw InvalidSpec(spec.name + ": unitriangular needs n >= 2");
      return unitriangular_generators(spec.n, p);
    case Family::kDirectProduct: {
      if (spec.factors.empty()) throw InvalidSpec(spec.name + ": direct product without factors");
      for (const auto& f : spec.factors)
        if (f.p != spec.p) throw InvalidSpec(spec.name + ": factors over different primes");
      require_odd_prime(spec);
      const std::size_t d = generator_degree(spec);
      std::vector<Permutation> gens;
      std::size_t offset = 0;
      for (const auto& f : spec.factors) {
        for (const auto& g : family_generators(f)) gens.push_back(g.embedded(offset, d));
        offset += generator_degree(f);
      }
      return gens;
    }
    case Family::kFromFile: break;
  }
  throw InvalidSpec(spec.name + ": from_file specs have no family generators");
}

GroupPtr build(const GroupSpec& spec, const Caps& caps) {
  if (spec.family == Family::kFromFile) {
    GroupPtr g = load_group_file(spec.source, caps);
    if (spec.p != 0 && g->prime() != spec.p)
      throw InvalidSpec(spec.name + ": file declares p = " + std::to_string(g->prime()));
    return g;
  }
  const auto gens = family_generators(spec);
  if (auto order = expected_order(spec); order && *order > caps.max_order)
    throw OrderCapExceeded(spec.name + ": order " + std::to_string(*order) + " exceeds max_order " +
                           std::to_string(caps.max_order));
  return enumerate_group(gens, spec.p, caps, spec.name, generator_degree(spec));
}

std::vector<GroupSpec> default_corpus(std::size_t limit) {
  std::vector<GroupSpec> all;
  for (unsigned p : {3u, 5u}) {
    const std::string ps = std::to_string(p);
    for (unsigned n = 1; n <= 3; ++n)
      all.push_back(make("c" + std::to_string(ipow(p, n)), Family::kCyclic, p, n));
    for (unsigned n = 1; n <= 3; ++n)
      all.push_back(make("ea" + ps + "_" + std::to_string(n), Family::kElemAbelian, p, n));
    const std::string p3 = std::to_string(ipow(p, 3));
    all.push_back(make("heis" + p3, Family::kExtraspecialExpP, p));
    all.push_back(make("m" + p3, Family::kExtraspecialExpP2, p));
    all.push_back(make("wr" + ps, Family::kWreathCpCp, p));
    all.push_back(make("ut3_" + ps, Family::kUnitriangular, p, 3));
    if (p == 3) {
      all.push_back(make("ut4_3", Family::kUnitriangular, 3, 4));
      GroupSpec hc = make("heis27xc3", Family::kDirectProduct, 3);
      hc.factors = {make("heis27", Family::kExtraspecialExpP, 3), make("c3", Family::kCyclic, 3, 1)};
      all.push_back(hc);
      GroupSpec cc = make("c9xc3", Family::kDirectProduct, 3);
      cc.factors = {make("c9", Family::kCyclic, 3, 2), make("c3", Family::kCyclic, 3, 1)};
      all.push_back(cc);
    }
  }
  std::vector<GroupSpec> out;
  for (auto& s : all)
    if (*expected_order(s) <= limit) out.push_back(std::move(s));
  return out;
}

std::optional<GroupSpec> find_in_corpus(const std::string& name) {
  for (auto& s : default_corpus(std::numeric_limits<std::size_t>::max()))
    if (s.name == name) return s;
  return std::nullopt;
}

}  // namespace pgroup
