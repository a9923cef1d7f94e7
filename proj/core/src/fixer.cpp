#include "domfix/fixer.hpp"

#include "domfix/prism.hpp"

namespace domfix {

namespace {

void require_nontrivial_connected(const Graph& g, const char* who) {
  if (g.n() < 2 || !is_connected(g))
    throw std::invalid_argument(std::string(who) +
                                ": graph must be connected with >= 2 vertices");
}

}  // namespace

std::vector<SymmetricGammaSet> find_symmetric_gamma_sets(
    const Graph& g, const FixerOptions& opts) {
  require_nontrivial_connected(g, "find_symmetric_gamma_sets");
  int n = g.n();
  int gamma = gamma_exact(g).gamma;
  if (gamma > 30)
    throw std::invalid_argument(
        "find_symmetric_gamma_sets: bipartition search needs gamma <= 30");
  BitSet all = BitSet::full(n);

  std::vector<SymmetricGammaSet> out;
  long long count = 0;
  enumerate_gamma_sets(g, gamma, [&](const BitSet& d) {
    if (++count > opts.gamma_set_limit)
      throw EnumerationLimitError(opts.gamma_set_limit);
    auto elems = d.to_vector();
    int k = static_cast<int>(elems.size());
    // Odd masks only: the smallest label of D stays in d1, which is the
    // normalization min(d1) < min(d2).
    for (unsigned mask = 1; mask < (1u << k); mask += 2) {
      BitSet d1(n), d2(n);
      for (int i = 0; i < k; ++i)
        (mask >> i & 1 ? d1 : d2).set(elems[i]);
      if (dominates_set(g, d1, all - d2) && dominates_set(g, d2, all - d1))
        out.push_back({d1, d2});
    }
    return true;
  });
  return out;
}

PrismFixerResult is_prism_fixer(const Graph& g, const FixerOptions& opts) {
  require_nontrivial_connected(g, "is_prism_fixer");
  auto sets = find_symmetric_gamma_sets(g, opts);

  PrismFixerResult r;
  r.gamma = gamma_exact(g).gamma;
  r.gamma_prism =
      gamma_exact(build_prism(g, Permutation::identity(g.n())).graph).gamma;
  r.fixer = !sets.empty();
  if ((r.gamma_prism == r.gamma) != r.fixer)
    throw std::logic_error(
        "is_prism_fixer: symmetric gamma-set search disagrees with direct "
        "prism computation");
  if (r.fixer) r.witness = sets.front();
  return r;
}

bool check_hartnell_rall_c(const Graph& g, const SymmetricGammaSet& s) {
  BitSet d = s.whole();
  for (int v = 0; v < g.n(); ++v) {
    const BitSet& nb = g.neighbors(v);
    if (d.test(v)) {
      if ((nb - d).count() < 2) return false;
    } else {
      if ((nb & s.d1).count() != 1 || (nb & s.d2).count() != 1) return false;
    }
  }
  return true;
}

std::optional<PiFixerWitness> check_pi_fixer_condition(
    const Graph& g, const Permutation& pi, const FixerOptions& opts) {
  require_nontrivial_connected(g, "check_pi_fixer_condition");
  int n = g.n();
  if (pi.size() != n)
    throw std::invalid_argument("check_pi_fixer_condition: permutation size mismatch");
  int gamma = gamma_exact(g).gamma;
  if (gamma > 30)
    throw std::invalid_argument(
        "check_pi_fixer_condition: bipartition search needs gamma <= 30");
  BitSet all = BitSet::full(n);

  std::optional<PiFixerWitness> found;
  long long count = 0;
  enumerate_gamma_sets(g, gamma, [&](const BitSet& d) {
    if (++count > opts.gamma_set_limit)
      throw EnumerationLimitError(opts.gamma_set_limit);
    if (!is_dominating(g, pi.apply(d))) return true;
    auto elems = d.to_vector();
    int k = static_cast<int>(elems.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      BitSet d1(n), d2(n);
      for (int i = 0; i < k; ++i)
        (mask >> i & 1 ? d1 : d2).set(elems[i]);
      if (!dominates_set(g, d1, all - d2)) continue;
      if (!dominates_set(g, pi.apply(d2), all - pi.apply(d1))) continue;
      found = PiFixerWitness{d1, d2};
      return false;
    }
    return true;
  });
  return found;
}

bool check_intersection_property(const SymmetricGammaSet& a,
                                 const SymmetricGammaSet& b) {
  if (a.d1.universe() != b.d1.universe())
    throw std::invalid_argument(
        "check_intersection_property: sets from different graphs");
  const BitSet *a1 = &a.d1, *a2 = &a.d2, *b1 = &b.d1, *b2 = &b.d2;
  if (a1->count() > a2->count()) std::swap(a1, a2);
  if (b1->count() > b2->count()) std::swap(b1, b2);

  if (a1->count() < b1->count()) return a2->intersects(*b1);
  if (b1->count() == a1->count() && a1->count() < a2->count())
    return a2->intersects(*b2);
  return true;
}

bool check_symmetric_invariants(const Graph& g, const SymmetricGammaSet& s) {
  BitSet d = s.whole();
  bool independent = true;
  d.for_each([&](int v) {
    if (g.neighbors(v).intersects(d)) independent = false;
  });
  if (!independent) return false;

  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < 2) return false;

  if (!is_two_packing(g, s.d1) || !is_two_packing(g, s.d2)) return false;
  if (!is_maximal_two_packing(g, s.d1) || !is_maximal_two_packing(g, s.d2))
    return false;

  int want = g.n() - d.count();
  for (const BitSet* part : {&s.d1, &s.d2}) {
    int sum = 0;
    part->for_each([&](int v) { sum += g.degree(v); });
    if (sum != want) return false;
  }
  return true;
}

EvenStructure classify_even_structure(
    const std::vector<SymmetricGammaSet>& sets) {
  if (sets.empty())
    throw std::invalid_argument(
        "classify_even_structure: no symmetric gamma-sets (not a prism fixer)");

  std::vector<SymmetricGammaSet> evens;
  for (const auto& s : sets)
    if (s.even()) evens.push_back(s);
  if (evens.empty()) return {EvenStructureKind::NO_EVEN, {}};

  for (size_t i = 0; i < evens.size(); ++i) {
    bool meets_all = true;
    for (size_t j = 0; j < evens.size() && meets_all; ++j)
      if (j != i && !evens[i].whole().intersects(evens[j].whole()))
        meets_all = false;
    if (meets_all) return {EvenStructureKind::PIVOT, {evens[i]}};
  }

  std::vector<SymmetricGammaSet> family;
  for (const auto& e : evens) {
    bool clear = true;
    for (const auto& f : family)
      if (e.whole().intersects(f.whole())) {
        clear = false;
        break;
      }
    if (clear) family.push_back(e);
  }
  return {EvenStructureKind::DISJOINT_FAMILY, std::move(family)};
}

EvenStructure classify_even_structure(const Graph& g,
                                      const FixerOptions& opts) {
  return classify_even_structure(find_symmetric_gamma_sets(g, opts));
}

}  // namespace domfix
