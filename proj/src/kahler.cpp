#include "wittray/kahler.hpp"

#include <algorithm>
#include <set>

#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "graded-hochschild";

// dk ^ dJ rewritten in increasing order; nullopt when it vanishes.
std::optional<std::pair<std::vector<std::uint32_t>, int>> wedge_front(std::uint32_t k,
                                                                    const std::vector<std::uint32_t>& j) {
  auto pos = std::lower_bound(j.begin(), j.end(), k);
  if (pos != j.end() && *pos == k) return std::nullopt;
  std::vector<std::uint32_t> out(j.begin(), pos);
  out.push_back(k);
  out.insert(out.end(), pos, j.end());
  const auto moved = pos - j.begin();
  return std::make_pair(std::move(out), moved % 2 ? -1 : 1);
}

}  // namespace

KahlerForms::KahlerForms(std::shared_ptr<const GradedAlgebra> algebra, int top_degree,
                         std::optional<std::int64_t> cell_bound)
    : algebra_(std::move(algebra)),
      top_degree_(top_degree),
      cell_bound_(cell_bound.value_or(algebra_->top_weight())) {
  if (!algebra_->is_commutative()) {
    throw Error(ErrorCode::Unsupported, kModule, "Kahler forms need a commutative algebra");
  }
  if (top_degree_ < 0) throw Error(ErrorCode::InvalidArgument, kModule, "form degree bound must be >= 0");
  auto members = algebra_->monoid().members_up_to(algebra_->weight(), cell_bound_);
  std::sort(members.begin(), members.end(),
            [&](const Point& a, const Point& b) { return weighted_less(algebra_->weight(), a, b); });
  for (auto& eta : members) {
    cell_index_.emplace(eta, cell_degrees_.size());
    cell_degrees_.push_back(std::move(eta));
  }
  cells_.resize(cell_degrees_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) build_generators(cells_[i], cell_degrees_[i]);
  for (std::size_t i = 0; i < cells_.size(); ++i) build_relations(cells_[i], cell_degrees_[i]);
}

void KahlerForms::build_generators(Cell& c, const Point& eta) const {
  const auto& a = *algebra_;
  const auto members = a.monoid().members_up_to(a.weight(), dot(a.weight(), eta));
  const std::set<Point> member_set(members.begin(), members.end());
  c.generators.resize(top_degree_ + 1);
  c.index.resize(top_degree_ + 1);
  for (int n = 0; n <= top_degree_; ++n) {
    auto& out = c.generators[n];
    std::vector<std::uint32_t> wedge;
    auto rec = [&](auto&& self, std::uint32_t start, const Point& rest) -> void {
      if (static_cast<int>(wedge.size()) == n) {
        for (std::uint32_t i = 0; i < a.dim(); ++i)
          if (a.degree(i) == rest) out.push_back({i, wedge});
        return;
      }
      for (std::uint32_t k = start; k < a.dim(); ++k) {
        if (k == a.unit()) continue;
        const Point left = sub_points(rest, a.degree(k));
        if (!member_set.count(left)) continue;
        wedge.push_back(k);
        self(self, k + 1, left);
        wedge.pop_back();
      }
    };
    rec(rec, 0, eta);
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i) c.index[n].emplace(out[i], static_cast<std::uint32_t>(i));
  }
}

void KahlerForms::build_relations(Cell& c, const Point& eta) const {
  const auto& a = *algebra_;
  const auto& f = a.field();
  c.relations.resize(top_degree_ + 1);
  c.relations[0] = std::make_unique<Echelon>(f);
  for (int n = 1; n <= top_degree_; ++n) {
    auto& rel = *(c.relations[n] = std::make_unique<Echelon>(f));
    auto emit = [&](SparseBuilder& acc, const SparseVec& coeff, std::uint32_t k, const std::vector<std::uint32_t>& j,
                    const Rational& scale) {
      if (k == a.unit()) return;
      auto w = wedge_front(k, j);
      if (!w) return;
      for (const auto& [x, cx] : coeff) acc.add(c.index[n].at({x, w->first}), cx * w->second * scale);
    };
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
      if (i == a.unit()) continue;
      for (std::uint32_t j = i; j < a.dim(); ++j) {
        if (j == a.unit()) continue;
        const Point rest = sub_points(sub_points(eta, a.degree(i)), a.degree(j));
        auto it = cell_index_.find(rest);
        if (it == cell_index_.end()) continue;
        for (const auto& g : cells_[it->second].generators[n - 1]) {
          // a (d(e_i e_j) - e_i de_j - e_j de_i) ^ dJ
          SparseBuilder acc(f);
          const SparseVec unit_a{{g.coefficient, Rational(1)}};
          for (const auto& [k, x] : a.product(i, j)) emit(acc, unit_a, k, g.wedge, x);
          emit(acc, a.product(g.coefficient, i), j, g.wedge, -1);
          emit(acc, a.product(g.coefficient, j), i, g.wedge, -1);
          rel.insert(acc.finish());
        }
      }
    }
  }
}

const KahlerForms::Cell& KahlerForms::cell(const Point& eta) const {
  auto it = cell_index_.find(eta);
  if (it == cell_index_.end()) throw Error(ErrorCode::NotMember, kModule, "degree outside the computed forms");
  return cells_[it->second];
}

const std::vector<KahlerForms::Generator>& KahlerForms::generators(int n, const Point& eta) const {
  if (n < 0 || n > top_degree_) throw Error(ErrorCode::InvalidArgument, kModule, "form degree out of range");
  return cell(eta).generators[n];
}

std::uint32_t KahlerForms::index_of(int n, const Point& eta, const Generator& g) const {
  generators(n, eta);
  return cell(eta).index[n].at(g);
}

std::size_t KahlerForms::dimension(int n, const Point& eta) const {
  return generators(n, eta).size() - cell(eta).relations[n]->rank();
}

SparseVec KahlerForms::normal_form(int n, const Point& eta, const SparseVec& form) const {
  generators(n, eta);
  return cell(eta).relations[n]->reduce(form);
}

bool KahlerForms::equal(int n, const Point& eta, const SparseVec& x, const SparseVec& y) const {
  SparseBuilder acc(algebra_->field());
  acc.add(x, 1);
  acc.add(y, -1);
  return normal_form(n, eta, acc.finish()).empty();
}

SparseMatrix KahlerForms::d(int n, const Point& eta) const {
  if (n + 1 > top_degree_) throw Error(ErrorCode::InvalidArgument, kModule, "form degree out of range");
  const auto& src = generators(n, eta);
  SparseMatrix m = SparseMatrix::zero(generators(n + 1, eta).size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& g = src[j];
    if (g.coefficient == algebra_->unit()) continue;
    auto w = wedge_front(g.coefficient, g.wedge);
    if (!w) continue;
    m.columns[j] = {{index_of(n + 1, eta, {static_cast<std::uint32_t>(algebra_->unit()), w->first}),
                     Rational(w->second)}};
  }
  return m;
}

SparseVec KahlerForms::d(int n, const Point& eta, const SparseVec& form) const {
  return apply(algebra_->field(), d(n, eta), form);
}

Point KahlerForms::homogeneous_degree(const SparseVec& a) const {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, kModule, "the zero element has no degree");
  const Point& deg = algebra_->degree(a.front().first);
  for (const auto& [i, x] : a)
    if (algebra_->degree(i) != deg) throw Error(ErrorCode::InvalidArgument, kModule, "element is not homogeneous");
  return deg;
}

std::pair<Point, SparseVec> KahlerForms::function(const SparseVec& a) const {
  const Point deg = homogeneous_degree(a);
  SparseBuilder acc(algebra_->field());
  for (const auto& [i, x] : a) acc.add(index_of(0, deg, {i, {}}), x);
  return {deg, acc.finish()};
}

std::pair<Point, SparseVec> KahlerForms::multiply(const SparseVec& a, int n, const Point& eta,
                                                  const SparseVec& form) const {
  const Point deg = add_points(homogeneous_degree(a), eta);
  const auto& src = generators(n, eta);
  SparseBuilder acc(algebra_->field());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : form)
      for (const auto& [k, z] : algebra_->product(i, src[j].coefficient))
        acc.add(index_of(n, deg, {k, src[j].wedge}), x * y * z);
  return {deg, acc.finish()};
}

std::string KahlerForms::format(int n, const Point& eta, const SparseVec& form) const {
  if (form.empty()) return "0";
  const auto& gens = generators(n, eta);
  std::string out;
  for (const auto& [i, c] : form) {
    Rational x = c;
    if (!out.empty()) {
      out += x < 0 ? " - " : " + ";
      if (x < 0) x = -x;
    } else if (x < 0) {
      out += "-";
      x = -x;
    }
    const auto& g = gens[i];
    std::string term = algebra_->label(g.coefficient);
    if (x != 1) term = x.get_str() + (term == "1" ? "" : "*" + term);
    else if (term == "1" && !g.wedge.empty()) term.clear();
    for (std::size_t k = 0; k < g.wedge.size(); ++k)
      term += (term.empty() ? "" : (k ? "^" : " ")) + std::string("d") + algebra_->label(g.wedge[k]);
    out += term;
  }
  return out;
}

}  // namespace wittray
