#include "pkaeq/decide.hpp"

#include <algorithm>

#include "pkaeq/algebra.hpp"
#include "pkaeq/errors.hpp"

namespace pkaeq {

namespace {

struct Generator {
  Polynomial poly;
  std::vector<DerivationStep> path;
};

void require_over_states(const Polynomial& p, std::size_t num_states) {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (v.index >= num_states) throw InputError("seed mentions an unknown state");
    }
  }
}

class Run {
 public:
  Run(const Automaton& aut, const Polynomial& left, const Polynomial& right,
      const DecideConfig& cfg)
      : aut_(aut), left_(left), right_(right), cfg_(cfg), seed_(left - right) {}

  Verdict operator()() {
    if (coeff_sum(seed_) != 0) {
      // The total masses already differ on the empty word's profile.
      NotEquivalent ne;
      ne.failing_polynomial = seed_;
      ne.generators = 1;
      return with_witness(std::move(ne));
    }
    if (seed_.is_zero()) return Equivalent{0, 0, 0, GroebnerBasis(cfg_.order), {}};

    const DerivativeTable derivatives(aut_);
    std::vector<Generator> gens{{seed_, {}}};
    GroebnerBasis basis = buchberger(polys(gens), cfg_.order);
    std::size_t unexpanded = 0;

    for (std::size_t stage = 1;; ++stage) {
      if (stage > cfg_.max_stages) {
        throw ResourceError("no verdict within " + std::to_string(cfg_.max_stages) + " stages");
      }
      StageTrace trace;
      trace.stage = stage;
      std::vector<Generator> pending;

      const std::size_t end = gens.size();
      for (std::size_t i = unexpanded; i < end; ++i) {
        ++trace.expanded;
        for (std::size_t a = 0; a < aut_.alphabet_size(); ++a) {
          for (auto& [n, d] : derivatives(gens[i].poly, static_cast<Letter>(a))) {
            ++trace.derivatives;
            std::vector<DerivationStep> path = gens[i].path;
            path.push_back({static_cast<Letter>(a), n});
            if (coeff_sum(d) != 0) {
              NotEquivalent ne;
              ne.failing_polynomial = std::move(d);
              ne.derivation_path = std::move(path);
              ne.stages = stage;
              ne.generators = gens.size();
              ne.basis_size = basis.size();
              return with_witness(std::move(ne));
            }
            // Adopt the normal form: it generates the same ideal together
            // with the basis and keeps the generator set small.
            Polynomial r = make_monic(basis.reduce(d), cfg_.order);
            if (r.is_zero()) continue;
            const bool seen = std::any_of(pending.begin(), pending.end(),
                                          [&](const Generator& g) { return g.poly == r; });
            if (!seen) pending.push_back({std::move(r), std::move(path)});
          }
        }
      }
      unexpanded = end;

      if (pending.empty()) {
        trace.basis_size = basis.size();
        if (cfg_.on_stage) cfg_.on_stage(trace);
        Equivalent eq{stage, gens.size(), basis.size(), basis, polys(gens)};
        return eq;
      }

      trace.adopted = pending.size();
      GroebnerBasis previous = std::move(basis);
      for (auto& g : pending) gens.push_back(std::move(g));
      basis = buchberger(polys(gens), cfg_.order);
      if (cfg_.check_invariants) check(previous, basis, gens, end);
      trace.basis_size = basis.size();
      if (cfg_.on_stage) cfg_.on_stage(trace);
    }
  }

 private:
  static std::vector<Polynomial> polys(const std::vector<Generator>& gens) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.poly);
    return out;
  }

  Verdict with_witness(NotEquivalent ne) const {
    if (cfg_.find_witness) {
      ne.witness = find_witness(aut_, left_, right_, cfg_.witness_depth_cap);
    }
    return ne;
  }

  void check(const GroebnerBasis& previous, const GroebnerBasis& current,
             const std::vector<Generator>& gens, std::size_t first_new) const {
    if (!current.contains(seed_)) throw InvariantViolation("seed left the ideal");
    for (const auto& g : gens) {
      if (coeff_sum(g.poly) != 0) throw InvariantViolation("generator outside ker 1");
      if (!current.contains(g.poly)) throw InvariantViolation("generator outside the ideal");
    }
    for (const auto& b : previous.elements()) {
      if (!current.contains(b)) throw InvariantViolation("ideal shrank between stages");
    }
    bool grew = false;
    for (std::size_t i = first_new; i < gens.size(); ++i) grew |= !previous.contains(gens[i].poly);
    if (!grew) throw InvariantViolation("ideal did not grow strictly");
  }

  const Automaton& aut_;
  const Polynomial& left_;
  const Polynomial& right_;
  const DecideConfig& cfg_;
  const Polynomial seed_;
};

}  // namespace

Verdict decide(const Automaton& aut, const Polynomial& left, const Polynomial& right,
               const DecideConfig& cfg) {
  require_valid(aut, cfg.strict_validation);
  require_over_states(left, aut.num_states());
  require_over_states(right, aut.num_states());
  if (cfg.max_stages == 0 || cfg.witness_depth_cap == 0) {
    throw InputError("stage and witness caps must be positive");
  }
  return Run(aut, left, right, cfg)();
}

Verdict decide(const Automaton& aut, const Polynomial& p, const DecideConfig& cfg) {
  return decide(aut, p, Polynomial(), cfg);
}

}  // namespace pkaeq
