// The idempotent completion of the oriented model: objects are idempotents,
// morphisms p -> r are the elements r o x o p. Provides hom-space bases,
// direct-sum certificates found by exact linear algebra, and the search that
// splits a lifted Jones-Wenzl idempotent into vertical-strand objects.
//
// Every computation takes a Relations value. Under Relations::kLoopValues
// elements are compared in the bare oriented model; under
// Relations::kPopSwitch they are compared after the weight functor, i.e.
// modulo the pop-switch relation. The Jones-Wenzl splitting needs the latter:
// in the bare model lift(p_n) has endomorphisms that no sum of n+1 strand
// objects can carry (for n >= 2), which find_isomorphism detects exactly.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "popswitch/otl.hpp"
#include "popswitch/tldiag.hpp"

namespace popswitch {

/// An idempotent endomorphism in the oriented model.
class IdempotentObject {
 public:
  /// Throws std::invalid_argument unless idem is an endomorphism with
  /// idem o idem == idem exactly.
  IdempotentObject(std::string name, OrElement idem);

  /// iota(s).
  static IdempotentObject strands(const Signature& s);
  /// lift(x) for an idempotent x of the unoriented algebra; remembers x.
  static IdempotentObject lifted(std::string name, const Element& x);

  const std::string& name() const { return name_; }
  int arity() const { return idem_.bottom_count(); }
  const OrElement& idem() const { return idem_; }
  /// The unoriented idempotent this object was lifted from, if any.
  const std::optional<Element>& unoriented() const { return unoriented_; }

 private:
  std::string name_;
  OrElement idem_;
  std::optional<Element> unoriented_;
};

/// Which diagrams x are used to generate r o x o p.
enum class Candidates : std::uint8_t {
  kOriented,    // every oriented diagram
  kUnoriented,  // lifts of unoriented diagrams only (the Temperley-Lieb envelope)
};

struct KaroubiOptions {
  Relations relations = Relations::kPopSwitch;
  Convention convention = Convention::kCounterclockwiseIsQ;
  Candidates candidates = Candidates::kOriented;
  /// Random restarts of the certificate solve; coefficients come from a
  /// fixed-seed generator so results are reproducible.
  int attempts = 4;
  std::uint32_t seed = 20240229;
};

/// A basis of { r o x o p } as x runs over the candidate diagrams, computed by
/// exact elimination. Each basis element is r o x o p for a single diagram x.
std::vector<OrElement> hom_basis(const IdempotentObject& p, const IdempotentObject& r,
                                 const KaroubiOptions& options = {});

/// Sum of parts == p and parts[i] o parts[j] == 0 for i != j. Throws
/// std::invalid_argument if the arities differ.
bool check_direct_sum_hypotheses(const IdempotentObject& p, const std::vector<IdempotentObject>& parts,
                                 const KaroubiOptions& options = {});
/// Same test on bare elements, which need not be idempotent.
bool check_direct_sum_hypotheses(const OrElement& p, const std::vector<OrElement>& parts,
                                 const KaroubiOptions& options = {});

/// Morphisms u_k: summand_k -> p and v_k: p -> summand_k with
/// v_j o u_k = delta_jk summand_k and sum_k u_k o v_k = p.
struct SumCertificate {
  IdempotentObject p;
  std::vector<IdempotentObject> summands;
  std::vector<OrElement> u;
  std::vector<OrElement> v;
  Relations relations = Relations::kPopSwitch;
  Convention convention = Convention::kCounterclockwiseIsQ;
};

struct CertificateCheck {
  bool ok = false;
  std::string failure;  // first violated identity, empty when ok
};

/// Recomputes every certificate identity from scratch with or_compose and
/// compares under the certificate's relations.
CertificateCheck revalidate(const SumCertificate& certificate);

struct IsomorphismSearch {
  std::optional<SumCertificate> certificate;
  /// Why no certificate was produced. "dimension" reasons are exact
  /// obstructions; "no solution" means the randomized solve gave up.
  std::string reason;
};

/// Looks for a certificate p ~ summands. If the direct-sum hypotheses hold the
/// parts themselves are returned as u and v. Otherwise the hom-space
/// dimensions are compared first (an exact obstruction), then u_k is drawn at
/// random from Hom(summand_k, p) and the remaining conditions, linear in the
/// v_k, are solved exactly.
IsomorphismSearch find_isomorphism(const IdempotentObject& p, const std::vector<IdempotentObject>& summands,
                                   const KaroubiOptions& options = {});

/// Sum over s of q^charge(s), the closure condition used to prune subsets.
LaurentPoly charge_sum(const std::vector<Signature>& signatures);

struct Decomposition {
  int n = 0;
  std::vector<Signature> signatures;
  SumCertificate certificate;
  std::vector<RatFunc> closures;  // or_close_trace of each summand
  RatFunc closure_total;          // their sum
  RatFunc trace;                  // or_close_trace(lift(p_n))
};

struct DecompositionSearch {
  int n = 0;
  long subsets_examined = 0;
  long subsets_tried = 0;  // passed the closure filter
  std::optional<Decomposition> found;
  std::string last_reason;
};

/// Splits lift(p_n) into n+1 strand objects: walks the size-(n+1) subsets of
/// length-n signatures in lexicographic order, keeps those whose charge_sum is
/// [n+1], and returns the first one find_isomorphism certifies. The
/// certificate is revalidated before it is returned. 1 <= n <= 4
/// (std::domain_error otherwise).
DecompositionSearch decompose_jw(int n, const KaroubiOptions& options = {});

/// Text form ending in `VERIFIED n=<n> summands=<n+1>`.
std::string serialize(const Decomposition& d);

}  // namespace popswitch
