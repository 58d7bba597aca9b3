#include "selfsim/presentation.hpp"

#include <numeric>

#include "selfsim/series_io.hpp"

namespace selfsim::tree {

PermLog::PermLog(std::vector<Permutation> roots, std::size_t cap) : roots_(std::move(roots)) {
  for (const auto& s : roots_) orders_.push_back(s.order());
  const int m = roots_.empty() ? 1 : roots_.front().degree();
  std::vector<int> e(roots_.size(), 0);
  // odometer over prod [0, o_i), first index least significant
  while (true) {
    Permutation p = Permutation::identity(m);
    for (std::size_t i = 0; i < roots_.size(); ++i) p = p * roots_[i].pow(e[i]);
    auto it = table_.find(p);
    if (it == table_.end()) {
      table_.emplace(p, e);
      if (table_.size() > cap) throw Error(Errc::SaturationOverflow, "P(A) exceeds " + std::to_string(cap) + " elements");
    } else if (std::lexicographical_compare(e.rbegin(), e.rend(), it->second.rbegin(), it->second.rend())) {
      it->second = e;
    }
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == orders_[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
}

std::optional<std::vector<int>> PermLog::solve(const Permutation& s) const {
  auto it = table_.find(s);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<adic::PowerSeries> peel(Forest& f, const std::vector<Element>& betas, const PermLog& log,
                                    const Element& e, const adic::Truncation& t) {
  if (e.depth - 1 > t.D) throw Error(Errc::DepthExceeded, "peel depth exceeds the series degree bound");
  std::vector<adic::PowerSeries> q(betas.size(), adic::PowerSeries(t));
  Element cur = e;
  for (int level = 0; level < e.depth && !cur.is_identity(); ++level) {
    auto ex = log.solve(f.root(cur.node));
    if (!ex) {
      throw Error(Errc::PermSolveFail, "root " + f.root(cur.node).cycle_string() + " at level " +
                                           std::to_string(level) + " is not in P(A)");
    }
    Element div = identity(cur.depth);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      const int k = (*ex)[i];
      if (k == 0) continue;
      q[i].set(level, adic::MAdicInt::from_integer(t.m, t.K, k));
      div = mul(f, div, pow(f, truncate(f, betas[i], cur.depth), k));
    }
    cur = mul(f, cur, inverse(f, div));
    Element down;
    if (!desuspend(f, cur, down)) {
      throw Error(Errc::NotAbelian, "level " + std::to_string(level + 1) +
                                        " stabilizer element is not diagonal; the system is not abelian state-closed");
    }
    cur = down;
  }
  return q;
}

Element rebuild(Forest& f, const std::vector<Element>& betas, const std::vector<adic::PowerSeries>& q, int depth) {
  Element acc = identity(depth);
  for (std::size_t i = 0; i < betas.size(); ++i) acc = mul(f, acc, pow_series(f, truncate(f, betas[i], depth), q[i]));
  return acc;
}

adic::PowerSeries determinant(const std::vector<std::vector<adic::PowerSeries>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(Errc::ShapeMismatch, "empty determinant");
  if (n == 1) return a[0][0];
  adic::PowerSeries acc(a[0][0].truncation());
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<adic::PowerSeries>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<adic::PowerSeries> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(a[r][c]);
      }
      minor.push_back(std::move(row));
    }
    adic::PowerSeries term = a[0][col] * determinant(minor);
    if (col % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

ModulePresentation extract_relations(Forest& f, const std::vector<std::string>& names,
                                     const std::vector<Element>& betas, const adic::Truncation& t) {
  if (betas.empty()) throw Error(Errc::ShapeMismatch, "no generators");
  ModulePresentation pres;
  pres.names = names;
  pres.depth = betas.front().depth;
  for (const auto& b : betas) {
    pres.roots.push_back(f.root(b.node));
    pres.orders.push_back(pres.roots.back().order());
  }
  PermLog log(pres.roots);
  const std::size_t k = betas.size();
  std::vector<std::vector<adic::PowerSeries>> M(k, std::vector<adic::PowerSeries>(k, adic::PowerSeries(t)));
  for (std::size_t i = 0; i < k; ++i) {
    Element power = pow(f, betas[i], pres.orders[i]);
    Element gamma;
    if (!desuspend(f, power, gamma)) {
      throw Error(Errc::NotAbelian, names[i] + "^" + std::to_string(pres.orders[i]) + " is not diagonal");
    }
    auto row = peel(f, betas, log, gamma, t);
    for (std::size_t j = 0; j < k; ++j) {
      M[i][j] = -row[j].shifted(1);
      if (i == j) M[i][j] += adic::PowerSeries::monomial(t, pres.orders[i], 0);
    }
    pres.p.push_back(std::move(row));
  }
  pres.r = determinant(M);
  return pres;
}

std::vector<bool> verify_relations(Forest& f, const ModulePresentation& pres, const std::vector<Element>& betas) {
  std::vector<bool> ok;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    Element lhs = pow(f, betas[i], pres.orders[i]);
    std::vector<adic::PowerSeries> shifted;
    for (const auto& p : pres.p[i]) shifted.push_back(p.shifted(1));
    ok.push_back(mul(f, lhs, inverse(f, rebuild(f, betas, shifted, lhs.depth))).is_identity());
  }
  return ok;
}

nlohmann::json to_json(const ModulePresentation& p) {
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i = 0; i < p.names.size(); ++i) {
    gens.push_back({{"name", p.names[i]}, {"root", p.roots[i].cycle_string()}, {"order", p.orders[i]}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : p.p) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& s : row) r.push_back(adic::format_series(s));
    rows.push_back(r);
  }
  return {{"generators", gens}, {"relations", rows}, {"annihilator", adic::format_series(p.r)},
          {"depth", p.depth}};
}

}  // namespace selfsim::tree
