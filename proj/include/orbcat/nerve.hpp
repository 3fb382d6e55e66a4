#pragma once

#include "orbcat/fincat.hpp"
#include "orbcat/group.hpp"
#include "orbcat/snf.hpp"

namespace orbcat {

inline constexpr long long kDefaultSimplexCap = 1'000'000;

/// Streams every nondegenerate k-chain (composable sequence of
/// non-identity morphisms) for k = 1..maxk in lexicographic DFS order.
/// Returns the total simplex count including dimension 0; throws when it
/// would exceed `cap`.
template <class Visit>
long long for_each_chain(const FinCategory& c, int maxk, long long cap, Visit&& visit) {
  long long total = c.num_objects();
  if (total > cap) throw error("nerve: simplex cap " + std::to_string(cap) + " exceeded");
  if (maxk < 1) return total;
  std::vector<int> chain;
  chain.reserve(maxk);
  auto rec = [&](auto&& self, int obj) -> void {
    if (static_cast<int>(chain.size()) == maxk) return;
    for (int m : c.out_nonid[obj]) {
      chain.push_back(m);
      if (++total > cap) throw error("nerve: simplex cap " + std::to_string(cap) + " exceeded");
      visit(static_cast<int>(chain.size()), chain);
      self(self, c.mor_cod[m]);
      chain.pop_back();
    }
  };
  for (int start = 0; start < c.num_objects(); ++start) rec(rec, start);
  return total;
}

/// j-th face of a nondegenerate chain. Returns false when the face is
/// degenerate (an inner composition yields an identity).
bool chain_face(const FinCategory& c, const std::vector<int>& chain, int j, std::vector<int>& out);

struct TruncatedNerve {
  int maxdim = 0;  // N; chains are enumerated through dimension N+1
  std::vector<std::vector<std::vector<int>>> chains;  // chains[k], k >= 1
  std::vector<long long> counts;                      // counts[k], k = 0..N+1
};

TruncatedNerve nerve(const FinCategory& c, int n, long long cap = kDefaultSimplexCap);

/// Simplex counts only (streaming, nothing stored).
std::vector<long long> nerve_counts(const FinCategory& c, int maxk, long long cap = kDefaultSimplexCap);

/// Normalized chain complex of the truncated nerve; boundary[k] maps
/// k-chains to (k-1)-chains, with faces that become degenerate dropped.
/// ∂∘∂ = 0 is verified on construction.
struct ChainComplex {
  int top = 0;
  std::vector<long long> ranks;     // simplices per dimension, 0..top
  std::vector<SparseMat> boundary;  // boundary[k], k = 1..top; boundary[0] empty
};

ChainComplex chain_complex(const FinCategory& c, const TruncatedNerve& nv);

struct HomologyGroup {
  long long betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next
};

struct HomologyResult {
  int maxdim = 0;
  std::vector<HomologyGroup> groups;  // degrees 0..maxdim

  bool reduced_zero() const;  // H_0 = Z and H_k = 0 for 1 <= k <= maxdim
};

HomologyResult homology_of(const ChainComplex& cc, int n);
HomologyResult homology(const FinCategory& c, int n, long long cap = kDefaultSimplexCap);

/// Invariant factors (> 1) of G/[G,G], via the Smith normal form of the
/// Cayley relation matrix of the commutator quotient.
std::vector<mpz_class> abelianization(const FiniteGroup& g);

/// Exact acyclicity certificate for a category with an initial object:
/// verifies the contracting-homotopy identity ∂(hσ) + h(∂σ) = σ on every
/// nondegenerate chain up to dimension n, where h prepends the unique
/// morphism out of the initial object. A passing run certifies that the
/// reduced homology vanishes in degrees 0..n.
struct AcyclicityReport {
  bool applicable = false;  // category has an initial object
  bool ok = false;
  int initial_object = -1;
  long long checked = 0;
  std::string detail;
};

AcyclicityReport initial_object_acyclicity(const FinCategory& c, int n,
                                           long long cap = 100'000'000);

}  // namespace orbcat
