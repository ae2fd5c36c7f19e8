#pragma once

#include <optional>
#include <shared_mutex>

#include "plg/echelon.hpp"
#include "plg/special.hpp"
#include "plg/wedge.hpp"

namespace plg {

struct Certificate {
  bool ok = false;
  int tier = 0;  // 1 = exact / syntactic, 2 = modulo the relation database
  std::string detail;
};

// Per-weight store of certified relation generators with an exact reduced
// echelon form, plus a replayable provenance record per generator.
class RelationDB {
 public:
  struct Gen {
    int weight;
    LinComb lc;
    std::string provenance;
  };

  explicit RelationDB(const FieldCtx* ctx) : ctx_(ctx) {}

  const FieldCtx* ctx() const { return ctx_; }
  std::vector<Gen> generators() const;
  size_t size() const;

  // Canonical residue modulo the generators of e's weight.
  LinComb reduce(const LinComb& e) const;
  bool contains(const LinComb& e) const { return reduce(e).is_zero(); }

  // Registers a certified generator.  The coideal-closure invariant (its
  // cobracket must be certified zero against the lower weights) is asserted.
  void add_generator(const LinComb& g, const std::string& provenance);

  // Rebuilds the echelon from the generator list and checks it matches.
  bool echelon_consistent() const;

 private:
  friend std::map<std::pair<CanonLeg, CanonLeg>, Rat> wedge_residual(const WedgeElem&,
                                                                     const RelationDB&);
  LinComb reduce_unlocked(const LinComb& e) const;

  const FieldCtx* ctx_;
  std::vector<Gen> gens_;
  std::map<int, SparseEchelon<CorrSym>> ech_;
  mutable std::shared_mutex mu_;
};

// Residual coordinates of a wedge after reducing every weight >= 2 leg
// modulo the database and expressing weight-1 legs over the factor base.
std::map<std::pair<CanonLeg, CanonLeg>, Rat> wedge_residual(const WedgeElem& w,
                                                            const RelationDB& db);

// Certified zero-test in /\^2 L^f: weight-1 legs in multiplicative
// coordinates, higher legs reduced modulo the database.  `true` is a
// certificate; `false` only means "not certified".
bool wedge_is_zero(const WedgeElem& w, const RelationDB& db);

// Sp_from - Sp_to of a family whose cobracket is certified zero; the result
// is registered as a generator.  Refuses (throws) without the certificate.
LinComb derive_relation(RelationDB& db, const LinComb& family, const SpecPoint& from,
                        const SpecPoint& to, const std::string& label);

// Li_2 at the Lie level: -cor(1, 0, x).
LinComb li2_lie(const FieldCtx* ctx, const FieldElem& x);
// Li_n at the Lie level: -cor(1, 0^(n-1), x).
LinComb lin_lie(const FieldCtx* ctx, int n, const FieldElem& x);

// (n1,n2)-shuffles of {1,...,n1+n2} (positions of the first block ascend).
std::vector<std::vector<int>> shuffle_perms(int n1, int n2);

// Verifiers for the named identities.  Exact at weight <= 2, modulo db above.
Certificate verify_five_term(const FieldCtx* ctx, const FieldElem& a, const FieldElem& b);
Certificate verify_shuffle(const FieldCtx* ctx, std::span<const FieldElem> x, int n1, int n2,
                           const RelationDB& db);
Certificate verify_reversal(const FieldCtx* ctx, std::span<const FieldElem> x,
                            const RelationDB& db);
Certificate verify_distribution(const FieldCtx* ctx, unsigned N, std::span<const FieldElem> x,
                                const RelationDB& db);

// The shuffle / reversal / distribution element itself (before certification).
LinComb shuffle_element(const FieldCtx* ctx, std::span<const FieldElem> x, int n1, int n2);
LinComb reversal_element(const FieldCtx* ctx, std::span<const FieldElem> x);
LinComb distribution_element(const FieldCtx* ctx, unsigned N, std::span<const FieldElem> x);

std::vector<FieldElem> roots_of_unity(const FieldCtx* ctx, unsigned N);

}  // namespace plg
