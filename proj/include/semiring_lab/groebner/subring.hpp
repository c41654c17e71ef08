#pragma once

#include <cstddef>
#include <vector>

#include "semiring_lab/groebner/groebner.hpp"

namespace semiring_lab {

/// Generators of the kernel of Q[X₁,…,X_m] → Q[T₁,…,Tₙ], Xᵢ ↦ gᵢ. When
/// `complete` is false the list may be missing generators.
struct RelationIdeal {
  std::vector<Polynomial> generators;
  bool complete = true;
};

/// The Q-subalgebra of Q[T₁,…,Tₙ] generated by g₁,…,g_m, handled through tag
/// variables: J = (X₁ − g₁, …, X_m − g_m) in Q[T, X] with an elimination
/// order putting the T-block above the X-block. The basis of J is computed
/// once and reused by every query.
///
/// Ring layout of J: variables [0, n) are T₁…Tₙ, [n, n+m) are X₁…X_m.
class Subring {
 public:
  Subring(std::vector<Polynomial> generators, const GroebnerBudget& budget = {})
      : generators_(std::move(generators)),
        basis_(compute_basis(generators_, budget)) {}

  std::size_t ambient_vars() const { return generators_.front().nvars(); }
  std::size_t tag_vars() const { return generators_.size(); }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const GroebnerBasis& elimination_basis() const noexcept { return basis_; }

  /// Substitutes the generators into a tag-variable polynomial.
  Polynomial expand(const Polynomial& representation) const {
    if (representation.nvars() != tag_vars()) throw ArityMismatch("representation has wrong arity");
    std::vector<Polynomial> images;
    const Domain d = join(representation.domain(), generators_.front().domain());
    for (const auto& g : generators_) images.push_back(g.with_domain(d));
    return poly_subst(representation.with_domain(d), images);
  }

  /// G ∩ Q[X]: a basis of the relation ideal (complete when the elimination
  /// basis is).
  RelationIdeal relations() const {
    RelationIdeal rel;
    rel.complete = basis_.complete();
    const std::size_t n = ambient_vars();
    for (const auto& g : basis_.generators()) {
      if (g.involves_only(n, n + tag_vars())) rel.generators.push_back(project(g, tag_vars(), n));
    }
    return rel;
  }

  /// h ∈ Q[g₁,…,g_m] iff its normal form modulo J is free of T; that normal
  /// form is then the canonical representation. Member verdicts are
  /// re-checked by substitution. `integral` reports whether the
  /// representation has integer coefficients (then h ∈ Z[g₁,…,g_m]).
  MembershipCertificate membership(const Polynomial& h) const {
    if (h.nvars() != ambient_vars()) throw ArityMismatch("query lives in a different ring");
    const std::size_t n = ambient_vars();
    const std::size_t total = n + tag_vars();
    MembershipCertificate cert;
    cert.normal_form = normal_form(embed(h, total, 0), basis_);
    if (!cert.normal_form.involves_only(n, total)) {
      cert.verdict = basis_.complete() ? Membership::non_member : Membership::unknown;
      return cert;
    }
    Polynomial rep = project(cert.normal_form, tag_vars(), n);
    if (expand(rep) != h.with_domain(Domain::rational)) {
      throw AlgebraError("internal error: subalgebra representation does not expand to the query");
    }
    cert.integral = rep.has_integral_coefficients();
    cert.representation = std::move(rep);
    cert.verdict = Membership::member;
    return cert;
  }

 private:
  static GroebnerBasis compute_basis(const std::vector<Polynomial>& gens,
                                     const GroebnerBudget& budget) {
    if (gens.empty()) throw PreconditionError("a subring needs at least one generator");
    const std::size_t n = gens.front().nvars();
    const std::size_t m = gens.size();
    std::vector<Polynomial> tagged;
    for (std::size_t i = 0; i < m; ++i) {
      if (gens[i].nvars() != n) throw ArityMismatch("subring generators live in different rings");
      Polynomial x = Polynomial::variable(n + m, n + i, Domain::rational);
      tagged.push_back(x - embed(gens[i].with_domain(Domain::rational), n + m, 0));
    }
    return buchberger(tagged, MonomialOrder::elimination(n), budget);
  }

  std::vector<Polynomial> generators_;
  GroebnerBasis basis_;
};

/// Kernel of Xᵢ ↦ gᵢ by elimination.
inline RelationIdeal relation_ideal(const std::vector<Polynomial>& g,
                                    const GroebnerBudget& budget = {}) {
  return Subring(g, budget).relations();
}

/// Three-valued decision of h ∈ Q[g₁,…,g_m] with a substitution-checked
/// representation for members.
inline MembershipCertificate subalgebra_membership(const Polynomial& h,
                                                   const std::vector<Polynomial>& g,
                                                   const GroebnerBudget& budget = {}) {
  return Subring(g, budget).membership(h);
}

}  // namespace semiring_lab
