#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/kernel.hpp"

namespace pgroup {

/// Increasing chain 1 = Q0 <= Q1 <= ... <= Qn of normal subgroups in which
/// each step satisfies [Omega1(C_G(Q_{i-1})), Q_i; p-1] = 1.
struct ChainCertificate {
  std::vector<Subgroup> chain;
};

/// Clause of the chain conditions that a certificate violated.
enum class ChainClause { kNone, kEmpty, kStart, kContainment, kNormality, kCommutator };

const char* to_string(ChainClause c);

struct ChainVerdict {
  bool ok = true;
  std::size_t index = 0;
  ChainClause clause = ChainClause::kNone;

  explicit operator bool() const { return ok; }
};

/// Checks every clause, in chain order; reports the first failure.
ChainVerdict verify_chain(const Group& g, const ChainCertificate& cert);

/// True iff [Omega1(C_G(from)), to; p-1] = 1.
bool chain_step_holds(const Group& g, const Subgroup& from, const Subgroup& to);

struct ElemAbelianFamily {
  unsigned rank = 0;
  std::vector<Subgroup> members;
};

/// The largest r with an elementary abelian subgroup of order p^r.
unsigned p_rank(const Group& g, const Caps& caps = {});

/// Every elementary abelian subgroup of rank p_rank(G), sorted by member bit
/// vector. Throws SearchBudgetExceeded after caps.search_budget search nodes.
ElemAbelianFamily max_rank_elem_abelians(const Group& g, const Caps& caps = {});

/// Join of the maximal-rank elementary abelian subgroups.
Subgroup thompson_J(const Group& g, const Caps& caps = {});
Subgroup thompson_J(const Group& g, const ElemAbelianFamily& family);

struct OliverResult {
  Subgroup subgroup;
  ChainCertificate certificate;
};

/// The largest normal subgroup admitting a chain certificate, found by greedy
/// extension through normal closures. The certificate is verified before
/// returning; a failure throws CertificateInvalid.
OliverResult oliver_X(const Group& g);

/// Preimage of Z(G / X(G)).
Subgroup x1(const Group& g, const Caps& caps = {});
Subgroup x1(const Group& g, const Subgroup& oliver, const Caps& caps = {});

}  // namespace pgroup
