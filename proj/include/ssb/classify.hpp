#pragma once

// Isomorphism, derived and stable (Morita type) classification of the three
// families. Verdicts come from the classification theorems applied to the
// parameters; the separating invariants are recorded as closed-form values
// and can be recomputed from the built algebras with `audit`.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ssb/family_spec.hpp"

namespace ssb {

class FiniteAlgebra;

enum class EquivalenceKind { Isomorphic, Derived, StableMorita };
std::string_view to_string(EquivalenceKind r);

enum class Invariant {
  Simples,
  ShortCycle,  // length of the shorter cycle of Q_(p,q); 0 for a single cycle
  Dimension,
  Centre,
  HH1,
  CartanDeterminant,
  HHEven,              // dim HH^degree, degree = 2p-2 of the smaller p
  KulshammerQuotient,  // dim rad/rad^2 of Z/T_1^perp (char 2)
};
std::string invariant_name(Invariant inv, int degree = 0);

struct InvariantValue {
  Invariant kind;
  int degree = 0;
  long left = 0, right = 0;
  bool separates() const { return left != right; }
};

struct CitedFact {
  std::string key;
  std::string statement;
  std::string citation;
};

/// Looks up the table of external results. Throws InvalidParams on an
/// unknown key.
const CitedFact& cited_fact(const std::string& key);
const std::vector<CitedFact>& cited_facts();

struct EquivalenceVerdict {
  EquivalenceKind relation = EquivalenceKind::Derived;
  bool equivalent = false;
  std::uint32_t characteristic = 0;
  FamilySpec left, right;            // canonical inputs
  FamilySpec left_form, right_form;  // normal forms (same as inputs for Isomorphic)
  std::vector<InvariantValue> trace;  // compared in order; the last one separates when `separator` is set
  std::optional<InvariantValue> separator;
  std::vector<std::string> cited;     // keys into the cited-facts table
  std::string summary;
};

/// Representative of the derived class among Γ(p,q;r), Λ(1,n;m,M) with
/// 2 <= m <= M, and N_M^n with n >= 2. Throws InvalidParams on N_M^1, which
/// lies outside the classified families.
FamilySpec derived_normal_form(const FamilySpec& x, std::uint32_t ch);

EquivalenceVerdict isomorphic(const FamilySpec& x, const FamilySpec& y, std::uint32_t ch);
EquivalenceVerdict derived_equivalent(const FamilySpec& x, const FamilySpec& y, std::uint32_t ch);
EquivalenceVerdict stably_equivalent_morita(const FamilySpec& x, const FamilySpec& y, std::uint32_t ch);

/// Closed-form value of an invariant, when one is known for this family,
/// degree and characteristic.
std::optional<long> closed_form(Invariant inv, int degree, const FamilySpec& x, std::uint32_t ch);
/// The same invariant computed from the built algebra.
long computed_value(Invariant inv, int degree, const FamilySpec& x, std::uint32_t ch);

struct AuditLine {
  InvariantValue expected;
  long left = 0, right = 0;  // recomputed
  bool ok = false;
};

struct AuditReport {
  bool ok = true;
  std::vector<AuditLine> lines;
};

/// Built algebras and computed invariants, keyed by spec and characteristic.
class InvariantCache {
 public:
  long get(Invariant inv, int degree, const FamilySpec& x, std::uint32_t ch);

 private:
  std::map<std::tuple<FamilySpec, std::uint32_t, int, int>, long> values_;
  std::map<std::pair<FamilySpec, std::uint32_t>, std::shared_ptr<const FiniteAlgebra>> algebras_;
};

/// Recomputes every invariant of the trace from the built algebras. The audit
/// passes when each recomputed value equals the recorded one (so a separator
/// still separates).
AuditReport audit(const EquivalenceVerdict& v);
AuditReport audit(const EquivalenceVerdict& v, InvariantCache& cache);

struct IsoReport {
  std::uint32_t characteristic = 0;
  std::string epsilon;  // how the square root of -1 was obtained
  bool relations_ok = false;
  bool invertible = false;
  bool ok() const { return relations_ok && invertible; }
};

/// Checks that α -> α + εβ, β -> α - εβ defines an isomorphism
/// Γ(1,1;1) -> Λ(1,1;2,2). Without a square root of -1 in the prime field
/// the check runs over the extension by ε with ε^2 = -1. Throws
/// CharUnsupported in characteristic 2, where the two images coincide.
IsoReport verify_explicit_iso(std::uint32_t ch);

}  // namespace ssb
