#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/core/truth.hpp"
#include "semiring_lab/semiring/models.hpp"
#include "semiring_lab/semiring/presentation.hpp"

namespace semiring_lab {

/// One application of a relation inside a sum: `before` contains
/// multiplier·from, and `after` = before − multiplier·from + multiplier·to,
/// where (from, to) is relation `relation` read left-to-right when `forward`.
struct DerivationStep {
  Polynomial before;
  Polynomial after;
  std::size_t relation = 0;
  bool forward = true;
  Monomial multiplier;
};

using Derivation = std::vector<DerivationStep>;

/// Checks a derivation against the presentation, step by step, without
/// any budget: it must lead from p to q and every step must be a valid
/// relation application.
inline bool replay(const Presentation& pres, const Polynomial& p, const Polynomial& q,
                   const Derivation& derivation) {
  Polynomial current = p.with_domain(Domain::natural);
  for (const auto& step : derivation) {
    if (step.relation >= pres.relations().size()) return false;
    if (step.before != current || step.multiplier.nvars() != pres.nvars()) return false;
    const auto& [l, r] = pres.relations()[step.relation];
    const Polynomial& from = step.forward ? l : r;
    const Polynomial& to = step.forward ? r : l;
    Polynomial rest = current.with_domain(Domain::integer) -
                      from.shifted(step.multiplier, 1).with_domain(Domain::integer);
    for (const auto& [m, c] : rest.terms()) {
      if (sgn(c) < 0) return false;
    }
    Polynomial next = (rest + to.shifted(step.multiplier, 1).with_domain(Domain::integer))
                          .with_domain(Domain::natural);
    if (next != step.after) return false;
    current = std::move(next);
  }
  return current == q.with_domain(Domain::natural);
}

namespace detail {

using State = std::vector<std::uint32_t>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : s) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

/// Dense encoding of the elements of N[T] with total degree ≤ D and
/// coefficients ≤ C: one coefficient slot per monomial of degree ≤ D.
class StateSpace {
 public:
  StateSpace(std::size_t nvars, std::uint64_t max_degree, std::uint64_t max_coefficient)
      : nvars_(nvars), max_degree_(max_degree), max_coefficient_(max_coefficient) {
    std::vector<Exponent> exps(nvars, 0);
    enumerate(exps, 0, max_degree);
    std::sort(monomials_.begin(), monomials_.end(), [](const Monomial& a, const Monomial& b) {
      return MonomialOrder::graded_lex().less(a, b);
    });
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const noexcept { return monomials_.size(); }
  std::uint64_t max_degree() const noexcept { return max_degree_; }
  std::uint64_t max_coefficient() const noexcept { return max_coefficient_; }
  const Monomial& monomial(std::size_t i) const { return monomials_[i]; }

  std::optional<std::size_t> slot(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool fits(const Polynomial& p) const {
    if (p.total_degree() > max_degree_ && !p.is_zero()) return false;
    for (const auto& [m, c] : p.terms()) {
      if (c > mpq_class(static_cast<unsigned long>(max_coefficient_))) return false;
    }
    return true;
  }

  State encode(const Polynomial& p) const {
    if (!fits(p)) {
      throw OutOfBudget("element exceeds the degree or coefficient budget");
    }
    State s(size(), 0);
    for (const auto& [m, c] : p.terms()) s[*slot(m)] = static_cast<std::uint32_t>(c.get_num().get_ui());
    return s;
  }

  Polynomial decode(const State& s) const {
    Polynomial p(nvars_, Domain::natural);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 0) p.add_term(monomials_[i], mpq_class(static_cast<unsigned long>(s[i])));
    }
    return p;
  }

 private:
  void enumerate(std::vector<Exponent>& exps, std::size_t var, std::uint64_t left) {
    if (var == nvars_) {
      monomials_.emplace_back(exps);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      exps[var] = static_cast<Exponent>(e);
      enumerate(exps, var + 1, left - e);
    }
    exps[var] = 0;
  }

  std::size_t nvars_;
  std::uint64_t max_degree_;
  std::uint64_t max_coefficient_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

struct Move {
  std::size_t relation;
  bool forward;
  Monomial multiplier;
  std::vector<std::pair<std::size_t, std::uint32_t>> remove;
  std::vector<std::pair<std::size_t, std::uint32_t>> add;
};

inline std::vector<std::pair<std::size_t, std::uint32_t>> sparse(const StateSpace& space,
                                                                 const Polynomial& p) {
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  for (const auto& [m, c] : p.terms()) {
    out.emplace_back(*space.slot(m), static_cast<std::uint32_t>(c.get_num().get_ui()));
  }
  return out;
}

// Every single-step rewrite s + m·from → s + m·to that stays inside the
// space. Relations whose sides exceed the coefficient cap are still usable
// as long as the shifted sides fit.
inline std::vector<Move> build_moves(const Presentation& pres, const StateSpace& space) {
  std::vector<Move> moves;
  const auto& rels = pres.relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& [l, rhs] = rels[r];
    if (l == rhs) continue;
    const std::uint64_t side_degree = std::max(l.is_zero() ? 0 : l.total_degree(),
                                               rhs.is_zero() ? 0 : rhs.total_degree());
    if (side_degree > space.max_degree()) continue;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const Monomial& m = space.monomial(i);
      if (m.degree() + side_degree > space.max_degree()) continue;
      const Polynomial from = l.shifted(m, 1);
      const Polynomial to = rhs.shifted(m, 1);
      if (!space.fits(from) || !space.fits(to)) continue;
      moves.push_back({r, true, m, sparse(space, from), sparse(space, to)});
      moves.push_back({r, false, m, sparse(space, to), sparse(space, from)});
    }
  }
  return moves;
}

inline std::optional<State> apply(const Move& move, const State& s, std::uint64_t cap) {
  for (const auto& [i, c] : move.remove) {
    if (s[i] < c) return std::nullopt;
  }
  State next = s;
  for (const auto& [i, c] : move.remove) next[i] -= c;
  for (const auto& [i, c] : move.add) {
    if (next[i] + static_cast<std::uint64_t>(c) > cap) return std::nullopt;
    next[i] += c;
  }
  return next;
}

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

// BFS forest over states: each discovered state remembers the state and
// move it was reached from.
struct Forest {
  std::vector<State> states;
  std::unordered_map<State, std::size_t, StateHash> index;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::vector<std::size_t> component;

  std::size_t insert(State s, std::size_t from, std::size_t move, std::size_t comp) {
    const std::size_t id = states.size();
    index.emplace(s, id);
    states.push_back(std::move(s));
    parent.push_back(from);
    via.push_back(move);
    component.push_back(comp);
    return id;
  }

  std::optional<std::size_t> find(const State& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // Moves from the root of id's tree down to id.
  std::vector<std::size_t> path_from_root(std::size_t id) const {
    std::vector<std::size_t> chain;
    while (parent[id] != kNoParent) {
      chain.push_back(id);
      id = parent[id];
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }
};

// Grows the component of `root` (already inserted) breadth-first. Stops when
// `target` is reached, the component is exhausted, or `steps` runs out.
// Returns true when the component was fully explored.
inline bool explore(Forest& forest, std::size_t root, const std::vector<Move>& moves,
                    std::uint64_t cap, std::uint64_t& steps, const State* target) {
  std::deque<std::size_t> queue{root};
  const std::size_t comp = forest.component[root];
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      auto next = apply(moves[mv], forest.states[id], cap);
      if (!next || forest.index.contains(*next)) continue;
      if (steps == 0) return false;
      --steps;
      const bool hit = target != nullptr && *next == *target;
      queue.push_back(forest.insert(std::move(*next), id, mv, comp));
      if (hit) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Outcome of a word-problem query. Yes carries a derivation, No carries a
/// model of the relations separating the two elements.
struct Equivalence {
  Truth verdict = Truth::unknown;
  std::optional<Derivation> derivation;
  std::optional<ModelWitness> separation;
};

enum class ClosureStatus { complete, exhausted };

inline std::string to_string(ClosureStatus s) {
  return s == ClosureStatus::complete ? "complete" : "exhausted";
}

/// The congruence generated by a presentation's relations, restricted to
/// elements within the budget. Saturation enumerates the budgeted elements
/// by coefficient sum (small elements first) and grows each one's class
/// until max_steps states have been stored; the status is complete when
/// every budgeted element was reached. The closure is immutable after
/// construction and queries are pure.
class CongruenceClosure {
 public:
  CongruenceClosure(Presentation pres, const SemiringBudget& budget)
      : pres_(std::move(pres)),
        budget_(checked(budget)),
        space_(pres_.nvars(), budget.max_degree, budget.max_coefficient),
        moves_(detail::build_moves(pres_, space_)) {
    saturate();
  }

  const Presentation& presentation() const noexcept { return pres_; }
  const SemiringBudget& budget() const noexcept { return budget_; }
  ClosureStatus status() const noexcept { return status_; }
  std::size_t stored() const noexcept { return forest_.states.size(); }
  std::size_t moves() const noexcept { return moves_.size(); }

  bool within_budget(const Polynomial& p) const {
    return p.nvars() == pres_.nvars() && space_.fits(p);
  }

  /// Whether the stored equivalence already contains (p, q).
  bool contains(const Polynomial& p, const Polynomial& q) const {
    auto a = forest_.find(space_.encode(p));
    auto b = forest_.find(space_.encode(q));
    return a && b && forest_.component[*a] == forest_.component[*b];
  }

  /// Every stored element equivalent to p (empty if p was not stored).
  std::vector<Polynomial> stored_class(const Polynomial& p) const {
    std::vector<Polynomial> out;
    auto a = forest_.find(space_.encode(p));
    if (!a) return out;
    for (std::size_t i = 0; i < forest_.states.size(); ++i) {
      if (forest_.component[i] == forest_.component[*a]) out.push_back(space_.decode(forest_.states[i]));
    }
    return out;
  }

  /// A derivation p ~> q if one exists within budget: from the stored
  /// classes, else by a bounded search from p. `exhaustive` is set when a
  /// negative answer covered p's entire budgeted class.
  struct Search {
    std::optional<Derivation> derivation;
    bool exhaustive = false;
  };

  Search search(const Polynomial& p, const Polynomial& q) const {
    const detail::State sp = space_.encode(p);
    const detail::State sq = space_.encode(q);
    Search out;
    auto a = forest_.find(sp);
    auto b = forest_.find(sq);
    if (a && b && forest_.component[*a] == forest_.component[*b]) {
      out.derivation = stored_derivation(*a, *b);
      return out;
    }
    if (a && complete_[forest_.component[*a]]) {
      out.exhaustive = true;
      return out;
    }
    detail::Forest local;
    const std::size_t root = local.insert(sp, detail::kNoParent, 0, 0);
    std::uint64_t steps = budget_.max_steps;
    out.exhaustive = detail::explore(local, root, moves_, budget_.max_coefficient, steps, &sq);
    if (auto hit = local.find(sq)) {
      out.exhaustive = false;
      out.derivation = to_steps(local, local.path_from_root(*hit), false);
    }
    return out;
  }

  /// Bounded breadth-first search of p's class for an element satisfying
  /// `pred`, returned with a derivation from p.
  template <class Pred>
  std::optional<std::pair<Polynomial, Derivation>> find_in_class(const Polynomial& p,
                                                                 Pred pred) const {
    detail::Forest local;
    local.insert(space_.encode(p), detail::kNoParent, 0, 0);
    std::uint64_t steps = budget_.max_steps;
    for (std::size_t id = 0; id < local.states.size(); ++id) {
      Polynomial e = space_.decode(local.states[id]);
      if (pred(e)) return std::make_pair(std::move(e), to_steps(local, local.path_from_root(id), false));
      for (std::size_t mv = 0; mv < moves_.size(); ++mv) {
        auto next = detail::apply(moves_[mv], local.states[id], budget_.max_coefficient);
        if (!next || local.index.contains(*next)) continue;
        if (steps == 0) return std::nullopt;
        --steps;
        local.insert(std::move(*next), id, mv, 0);
      }
    }
    return std::nullopt;
  }

 private:
  static const SemiringBudget& checked(const SemiringBudget& budget) {
    if (budget.max_coefficient == 0 || budget.max_steps == 0) {
      throw PreconditionError("budget must be positive");
    }
    return budget;
  }

  void saturate() {
    std::uint64_t steps = budget_.max_steps;
    bool all = true;
    detail::State s(space_.size(), 0);
    // Coefficient sums 0, 1, 2, …; each sum enumerated as bounded
    // compositions over the monomial slots.
    const std::uint64_t max_sum = budget_.max_coefficient * space_.size();
    for (std::uint64_t sum = 0; sum <= max_sum; ++sum) {
      bool stop = false;
      std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t slot, std::uint64_t left) {
        if (stop || left > budget_.max_coefficient * (s.size() - slot)) return;
        if (slot + 1 == s.size()) {
          if (left > budget_.max_coefficient) return;
          s[slot] = static_cast<std::uint32_t>(left);
          visit(s, steps, stop, all);
          s[slot] = 0;
          return;
        }
        for (std::uint64_t c = std::min(left, budget_.max_coefficient) + 1; c-- > 0;) {
          s[slot] = static_cast<std::uint32_t>(c);
          rec(slot + 1, left - c);
          if (stop) break;
        }
        s[slot] = 0;
      };
      rec(0, sum);
      if (stop) {
        all = false;
        break;
      }
    }
    status_ = all ? ClosureStatus::complete : ClosureStatus::exhausted;
  }

  void visit(const detail::State& s, std::uint64_t& steps, bool& stop, bool& all) {
    if (forest_.index.contains(s)) return;
    if (steps == 0) {
      stop = true;
      return;
    }
    --steps;
    const std::size_t comp = complete_.size();
    const std::size_t root = forest_.insert(s, detail::kNoParent, 0, comp);
    const bool done = detail::explore(forest_, root, moves_, budget_.max_coefficient, steps, nullptr);
    complete_.push_back(done);
    if (!done) {
      all = false;
      stop = true;
    }
  }

  Derivation stored_derivation(std::size_t from, std::size_t to) const {
    Derivation up = to_steps(forest_, forest_.path_from_root(from), true);
    Derivation down = to_steps(forest_, forest_.path_from_root(to), false);
    up.insert(up.end(), std::make_move_iterator(down.begin()), std::make_move_iterator(down.end()));
    return up;
  }

  // Turns a root-to-node chain into steps; `reversed` walks it node-to-root.
  Derivation to_steps(const detail::Forest& forest, const std::vector<std::size_t>& chain,
                      bool reversed) const {
    Derivation out;
    for (std::size_t id : chain) {
      const auto& mv = moves_[forest.via[id]];
      DerivationStep step;
      step.before = space_.decode(forest.states[forest.parent[id]]);
      step.after = space_.decode(forest.states[id]);
      step.relation = mv.relation;
      step.forward = mv.forward;
      step.multiplier = mv.multiplier;
      if (reversed) {
        std::swap(step.before, step.after);
        step.forward = !step.forward;
      }
      out.push_back(std::move(step));
    }
    if (reversed) std::reverse(out.begin(), out.end());
    return out;
  }

  Presentation pres_;
  SemiringBudget budget_;
  detail::StateSpace space_;
  std::vector<detail::Move> moves_;
  detail::Forest forest_;
  std::vector<bool> complete_;
  ClosureStatus status_ = ClosureStatus::exhausted;
};

inline CongruenceClosure congruence_close(Presentation pres, const SemiringBudget& budget = {}) {
  return CongruenceClosure(std::move(pres), budget);
}

/// Three-valued word problem. Yes is backed by a replayable derivation within
/// budget; No by a model of the relations in which p and q differ; Unknown
/// otherwise. Inputs outside the budget are rejected with OutOfBudget.
inline Equivalence words_equivalent(const Polynomial& p, const Polynomial& q,
                                    const CongruenceClosure& cc) {
  const Presentation& pres = cc.presentation();
  for (const Polynomial* x : {&p, &q}) {
    if (x->nvars() != pres.nvars()) throw ArityMismatch("element does not live in the presentation");
    if (x->domain() != Domain::natural) throw DomainMismatch("word problem expects elements of N[T]");
    if (!cc.within_budget(*x)) throw OutOfBudget("element exceeds the degree or coefficient budget");
  }
  Equivalence out;
  if (p == q) {
    out.verdict = Truth::yes;
    out.derivation = Derivation{};
    return out;
  }
  if (cc.contains(p, q)) {
    out.verdict = Truth::yes;
    out.derivation = cc.search(p, q).derivation;
    return out;
  }
  if (auto model = find_separating_model(pres, p, q)) {
    out.verdict = Truth::no;
    out.separation = std::move(model);
    return out;
  }
  if (auto found = cc.search(p, q).derivation) {
    out.verdict = Truth::yes;
    out.derivation = std::move(found);
  }
  return out;
}

}  // namespace semiring_lab
