#include "pgroup/charsub.hpp"

#include <algorithm>
#include <limits>

#include "pgroup/error.hpp"

namespace pgroup {

const char* to_string(ChainClause c) {
  switch (c) {
    case ChainClause::kNone: return "none";
    case ChainClause::kEmpty: return "empty";
    case ChainClause::kStart: return "start";
    case ChainClause::kContainment: return "containment";
    case ChainClause::kNormality: return "normality";
    case ChainClause::kCommutator: return "commutator";
  }
  return "unknown";
}

bool chain_step_holds(const Group& g, const Subgroup& from, const Subgroup& to) {
  const Subgroup a = omega1(g, centralizer(g, from));
  return iterated_commutator(g, a, to, g.prime() - 1).is_trivial();
}

ChainVerdict verify_chain(const Group& g, const ChainCertificate& cert) {
  const auto& chain = cert.chain;
  if (chain.empty()) return {false, 0, ChainClause::kEmpty};
  if (!chain.front().is_trivial()) return {false, 0, ChainClause::kStart};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_normal(g, chain[i])) return {false, i, ChainClause::kNormality};
    if (i == 0) continue;
    if (!chain[i - 1].is_subgroup_of(chain[i])) return {false, i, ChainClause::kContainment};
    if (!chain_step_holds(g, chain[i - 1], chain[i])) return {false, i, ChainClause::kCommutator};
  }
  return {};
}

namespace {

std::uint64_t saturating_pow(unsigned p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

// Depth-first enumeration of elementary abelian subgroups E, each visited once
// through its canonical basis: e1 = min(E \ 1), e_{j+1} = min(E \ <e1..ej>).
// A child <E, x> is canonical iff x > e_k and x is the smallest new element.
// Candidates are the order-p elements centralizing E, outside E, above e_k;
// every element a descendant adds comes from that pool, which bounds the
// reachable rank.
class ElemAbelianSearch {
 public:
  ElemAbelianSearch(const Group& g, const Caps& caps, bool collect)
      : g_(g), caps_(caps), collect_(collect), in_e_(g.order()) {}

  void run() {
    std::vector<Elem> cand;
    for (Elem x = 1; x < g_.order(); ++x)
      if (g_.pow_p(x) == Group::identity()) cand.push_back(x);
    std::vector<Elem> elems{Group::identity()};
    in_e_.set(Group::identity());
    std::vector<Elem> basis;
    descend(elems, basis, cand);
  }

  unsigned best() const { return best_; }
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>>& found() { return found_; }

 private:
  void descend(const std::vector<Elem>& elems, std::vector<Elem>& basis,
               const std::vector<Elem>& cand) {
    if (++nodes_ > caps_.search_budget)
      throw SearchBudgetExceeded("elementary abelian search exceeded " +
                                 std::to_string(caps_.search_budget) + " nodes");
    const unsigned k = static_cast<unsigned>(basis.size());
    if (k > best_) {
      best_ = k;
      found_.clear();
    }
    if (collect_ && k == best_) found_.emplace_back(elems, basis);

    const std::uint64_t have = saturating_pow(g_.prime(), k);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const unsigned target = collect_ ? best_ : best_ + 1;
      const std::uint64_t need = saturating_pow(g_.prime(), target);
      if (need > have && cand.size() - i < need - have) break;

      const Elem x = cand[i];
      std::vector<Elem> next = elems;
      bool canonical = true;
      Elem power = x;
      for (unsigned j = 1; j < g_.prime() && canonical; ++j) {
        for (Elem e : elems) {
          const Elem y = g_.mul(power, e);
          if (y < x) {
            canonical = false;
            break;
          }
          next.push_back(y);
        }
        power = g_.mul(power, x);
      }
      if (!canonical) continue;

      for (std::size_t j = elems.size(); j < next.size(); ++j) in_e_.set(next[j]);
      std::vector<Elem> next_cand;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        const Elem y = cand[j];
        if (!in_e_.test(y) && g_.commute(x, y)) next_cand.push_back(y);
      }
      basis.push_back(x);
      descend(next, basis, next_cand);
      basis.pop_back();
      for (std::size_t j = elems.size(); j < next.size(); ++j) in_e_.reset(next[j]);
    }
  }

  const Group& g_;
  const Caps& caps_;
  bool collect_;
  ElementSet in_e_;
  unsigned best_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> found_;
};

}  // namespace

unsigned p_rank(const Group& g, const Caps& caps) {
  ElemAbelianSearch search(g, caps, false);
  search.run();
  return search.best();
}

ElemAbelianFamily max_rank_elem_abelians(const Group& g, const Caps& caps) {
  ElemAbelianSearch search(g, caps, true);
  search.run();
  ElemAbelianFamily family;
  family.rank = search.best();
  for (auto& [elems, basis] : search.found()) {
    ElementSet m(g.order());
    for (Elem e : elems) m.set(e);
    family.members.emplace_back(g, std::move(m), basis);
  }
  sort_subgroups(family.members);
  return family;
}

Subgroup thompson_J(const Group& g, const ElemAbelianFamily& family) {
  SubgroupBuilder b(g);
  for (const auto& e : family.members) b.add_all(e.gens());
  return b.build();
}

Subgroup thompson_J(const Group& g, const Caps& caps) {
  return thompson_J(g, max_rank_elem_abelians(g, caps));
}

OliverResult oliver_X(const Group& g) {
  Subgroup k = trivial_subgroup(g);
  ChainCertificate cert{{k}};
  const unsigned depth = g.prime() - 1;

  for (bool grew = true; grew;) {
    grew = false;
    const Subgroup a = omega1(g, centralizer(g, k));
    const std::vector<Elem> k_elems = k.elements();
    ElementSet settled = k.members();
    for (Elem x = 0; x < g.order(); ++x) {
      if (settled.test(x)) continue;
      SubgroupBuilder b(g, k);
      b.add(x);
      const Subgroup q = normal_closure(g, b.build());
      if (iterated_commutator(g, a, q, depth).is_trivial()) {
        k = q;
        cert.chain.push_back(q);
        grew = true;
        break;
      }
      // Every y = (x^c)^j * k with c in G, j prime to p and k in K gives
      // the same normal closure of K ∪ {y}, so the same rejection.
      std::vector<Elem> cls{x};
      ElementSet in_cls(g.order());
      in_cls.set(x);
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (Elem s : g.generators()) {
          const Elem c = g.conj(cls[i], s);
          if (!in_cls.test(c)) {
            in_cls.set(c);
            cls.push_back(c);
          }
        }
      for (Elem c : cls) {
        const std::size_t ord = g.element_order(c);
        Elem pw = c;
        for (std::size_t j = 1; j < ord; ++j, pw = g.mul(pw, c)) {
          if (j % g.prime() == 0 || settled.test(pw)) continue;
          for (Elem e : k_elems) settled.set(g.mul(pw, e));
        }
      }
    }
  }

  OliverResult result{k, std::move(cert)};
  if (const auto verdict = verify_chain(g, result.certificate); !verdict)
    throw CertificateInvalid(std::string("greedy certificate fails at step ") +
                             std::to_string(verdict.index) + " (" + to_string(verdict.clause) + ")");
  return result;
}

Subgroup x1(const Group& g, const Subgroup& oliver, const Caps& caps) {
  const Quotient q = quotient(g, oliver, caps);
  return preimage(q, center(*q.group));
}

Subgroup x1(const Group& g, const Caps& caps) { return x1(g, oliver_X(g).subgroup, caps); }

}  // namespace pgroup
