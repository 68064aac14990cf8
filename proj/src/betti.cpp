#include "seclab/betti.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <random>
#include <sstream>
#include <unordered_map>

#include "seclab/errors.hpp"

namespace seclab {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::int64_t v) {
  if (v < 0) throw InvalidArgument("negative Betti number");
  if (v == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = v;
  }
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [k, v] : entries_) pd = std::max(pd, k.first);
  return pd;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
  return r;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> t(projective_dimension() + 1, 0);
  for (const auto& [k, v] : entries_) t[k.first] += v;
  return t;
}

std::string format_betti_text(const BettiTable& t) {
  const int cols = t.projective_dimension() + 1;
  const int rows = t.regularity() + 1;
  auto tot = t.totals();
  std::vector<std::size_t> width(cols, 1);
  for (int i = 0; i < cols; ++i) {
    width[i] = std::max(std::to_string(i).size(), std::to_string(tot[i]).size());
  }
  std::size_t label = std::string("total:").size();
  for (int r = 0; r < rows; ++r) label = std::max(label, std::to_string(r).size() + 1);

  std::ostringstream out;
  auto line = [&](const std::string& head, auto cell) {
    std::string s = std::string(label - head.size(), ' ') + head;
    for (int i = 0; i < cols; ++i) {
      std::string c = cell(i);
      s += ' ' + std::string(width[i] - c.size(), ' ') + c;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line("", [](int i) { return std::to_string(i); });
  line("total:", [&](int i) { return std::to_string(tot[i]); });
  for (int r = 0; r < rows; ++r) {
    line(std::to_string(r) + ":", [&](int i) {
      auto v = t.row_entry(r, i);
      return v ? std::to_string(v) : std::string(".");
    });
  }
  return out.str();
}

nlohmann::json betti_to_json(const BettiTable& t) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& [k, v] : t.entries()) e.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
  nlohmann::json fr = nlohmann::json::array();
  for (const auto& [i, j] : t.frontier) fr.push_back({i, j});
  return {{"nvars", t.nvars()},
          {"entries", e},
          {"totals", t.totals()},
          {"complete", t.complete},
          {"frontier", fr},
          {"row_bound", t.row_bound},
          {"col_bound", t.col_bound},
          {"note", t.note}};
}

BettiTable betti_from_json(const nlohmann::json& j) {
  BettiTable t(j.at("nvars").get<int>());
  for (const auto& e : j.at("entries")) t.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<std::int64_t>());
  t.complete = j.value("complete", true);
  for (const auto& f : j.value("frontier", nlohmann::json::array())) t.frontier.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
  t.row_bound = j.value("row_bound", -1);
  t.col_bound = j.value("col_bound", -1);
  t.note = j.value("note", std::string());
  return t;
}

namespace {

IntPoly numerator_of(const Ideal& J, const GroebnerOptions& opts) {
  auto gb = J.groebner(MonomialOrder::grevlex(*J.ring()), opts);
  return hilbert_numerator(gb->leading_monomials(), J.ring()->nvars());
}

// Drop the last variable of J's ring, sending it to a random combination
// of the others.
Ideal cut_last_variable(const Ideal& J, std::mt19937_64& rng) {
  const RingSpec& R = *J.ring();
  const int m = R.nvars();
  std::vector<std::string> names;
  for (int i = 0; i + 1 < m; ++i) names.push_back(R.var_name(i));
  Ring small = make_ring({VariableBlock{"x", names, {1}}}, R.prime());
  std::vector<Polynomial> images;
  for (int i = 0; i + 1 < m; ++i) images.push_back(Polynomial::variable(small, i));
  std::vector<Term> lin;
  for (int i = 0; i + 1 < m; ++i) {
    std::uint32_t c = static_cast<std::uint32_t>(rng() % R.prime());
    if (c) lin.push_back({Monomial::variable(i), c});
  }
  images.push_back(Polynomial::from_terms(small, std::move(lin)));
  std::vector<Polynomial> gens;
  for (const auto& f : J.generators()) gens.push_back(f.substitute(images));
  return Ideal(small, std::move(gens));
}

// Standard monomials of S'/J per degree plus multiplication by variables.
struct Quotient {
  int n = 0;
  std::vector<std::vector<Monomial>> basis;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index;
  // mult[d][a * n + x] = NF(x * basis[d][a]) over basis[d + 1]
  std::vector<std::vector<SparseRow>> mult;
};

Quotient build_quotient(const Ideal& J, int top, const GroebnerOptions& opts) {
  Quotient Q;
  Q.n = J.ring()->nvars();
  auto gb = J.groebner(MonomialOrder::grevlex(*J.ring()), opts);
  const auto& leads = gb->leading_monomials();
  for (int d = 0; d <= top; ++d) {
    std::vector<Monomial> b;
    if (!gb->is_unit()) {
      for (const auto& m : monomials_of_degree(Q.n, d)) {
        bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
        if (standard) b.push_back(m);
      }
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    for (std::size_t a = 0; a < b.size(); ++a) idx.emplace(b[a], a);
    Q.basis.push_back(std::move(b));
    Q.index.push_back(std::move(idx));
  }
  Q.mult.resize(top + 1);
  for (int d = 0; d < top; ++d) {
    const auto& b = Q.basis[d];
    auto& out = Q.mult[d];
    out.resize(b.size() * Q.n);
    for (std::size_t a = 0; a < b.size(); ++a) {
      for (int x = 0; x < Q.n; ++x) {
        Monomial xm = b[a] * Monomial::variable(x);
        SparseRow row;
        auto it = Q.index[d + 1].find(xm);
        if (it != Q.index[d + 1].end()) {
          row.emplace_back(static_cast<std::uint32_t>(it->second), 1u);
        } else {
          Polynomial nf = gb->reduce(Polynomial::monomial(J.ring(), xm));
          for (const auto& t : nf.terms()) row.emplace_back(static_cast<std::uint32_t>(Q.index[d + 1].at(t.m)), t.c);
          std::sort(row.begin(), row.end());
        }
        out[a * Q.n + x] = std::move(row);
      }
    }
  }
  return Q;
}

// Subsets of {0..n-1} of each size as bitmasks, increasing order.
struct Subsets {
  std::vector<std::vector<std::uint32_t>> of_size;
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> index;
};

Subsets make_subsets(int n, int max_size) {
  Subsets s;
  s.of_size.resize(max_size + 1);
  s.index.resize(max_size + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int k = __builtin_popcountll(mask);
    if (k <= max_size) s.of_size[k].push_back(static_cast<std::uint32_t>(mask));
  }
  for (int k = 0; k <= max_size; ++k) {
    for (std::size_t a = 0; a < s.of_size[k].size(); ++a) s.index[k].emplace(s.of_size[k][a], a);
  }
  return s;
}

// Koszul differential Lambda^i (x) A_r -> Lambda^{i-1} (x) A_{r+1}.
SparseMatrix koszul_matrix(const Quotient& Q, const Subsets& S, int i, int r, const PrimeField& F) {
  SparseMatrix M;
  const std::size_t dst_dim = Q.basis[r + 1].size();
  M.cols = S.of_size[i - 1].size() * dst_dim;
  const auto& src = Q.basis[r];
  M.rows.reserve(S.of_size[i].size() * src.size());
  for (std::uint32_t mask : S.of_size[i]) {
    for (std::size_t a = 0; a < src.size(); ++a) {
      SparseRow row;
      int pos = 0;
      for (int x = 0; x < Q.n; ++x) {
        if (!(mask >> x & 1u)) continue;
        std::size_t t = S.index[i - 1].at(mask & ~(1u << x));
        const auto& img = Q.mult[r][a * Q.n + x];
        for (const auto& [c, v] : img) {
          std::uint32_t val = (pos % 2 == 0) ? v : F.neg(v);
          row.emplace_back(static_cast<std::uint32_t>(t * dst_dim + c), val);
        }
        ++pos;
      }
      std::sort(row.begin(), row.end());
      M.rows.push_back(std::move(row));
    }
  }
  return M;
}

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

ArtinianReduction artinian_reduction(const Ideal& I, std::uint64_t seed, const GroebnerOptions& opts) {
  if (!I.ring()->standard_graded()) throw InvalidArgument("Betti tables need a standard graded ring");
  if (!I.is_homogeneous()) throw InvalidArgument("Betti tables need a homogeneous ideal");
  ArtinianReduction out;
  IntPoly N = numerator_of(I, opts);
  HilbertData h = hilbert_from_numerator(N, I.ring()->nvars(), 0);
  out.krull_dim = h.krull_dim;
  out.reduced = I;
  std::mt19937_64 rng(seed);
  // the zero ideal: nothing to cut against, S itself is the answer
  if (out.krull_dim == I.ring()->nvars()) return out;

  // All cuts at once: l_1..l_dim is a regular sequence iff the quotient is
  // Artinian of length deg(S/I) (length >= e(l; A) >= e(A), with equality
  // exactly when A is Cohen-Macaulay).
  if (out.krull_dim > 0 && out.krull_dim < I.ring()->nvars()) {
    Ideal J = I;
    for (int s = 0; s < out.krull_dim; ++s) J = cut_last_variable(J, rng);
    IntPoly M = numerator_of(J, opts);
    HilbertData hj = hilbert_from_numerator(M, J.ring()->nvars(), 0);
    if (hj.krull_dim == 0 && hj.degree == h.degree) {
      out.reduced = std::move(J);
      out.eliminated = out.krull_dim;
      out.artinian = true;
      return out;
    }
  }

  for (int s = 0; s < out.krull_dim; ++s) {
    bool accepted = false;
    // A random form fails only with probability about deg/p; retry a few times.
    for (int attempt = 0; attempt < 4 && !accepted; ++attempt) {
      Ideal next = cut_last_variable(out.reduced, rng);
      if (numerator_of(next, opts) == N) {
        out.reduced = std::move(next);
        accepted = true;
      }
    }
    if (!accepted) break;
    ++out.eliminated;
  }
  out.artinian = out.eliminated == out.krull_dim;
  return out;
}

BettiTable betti_table(const Ideal& I, const BettiOptions& opts) {
  const int n = I.ring()->nvars();
  BettiTable table(n);
  if (!I.ring()->standard_graded()) throw InvalidArgument("Betti tables need a standard graded ring");
  if (!I.is_homogeneous()) throw InvalidArgument("Betti tables need a homogeneous ideal");
  if (opts.row_bound && *opts.row_bound < 0) throw InvalidArgument("row bound must be non-negative");
  if (opts.col_bound && *opts.col_bound < 0) throw InvalidArgument("column bound must be non-negative");
  if (I.is_unit()) {
    table.row_bound = opts.row_bound.value_or(0);
    table.col_bound = opts.col_bound.value_or(n);
    return table;
  }
  if (std::all_of(I.generators().begin(), I.generators().end(), [](const Polynomial& f) { return f.is_zero(); })) {
    table.set(0, 0, 1);
    table.row_bound = opts.row_bound.value_or(0);
    table.col_bound = opts.col_bound.value_or(n);
    return table;
  }

  Ideal J = I;
  bool artinian = false;
  if (opts.reduce) {
    auto red = artinian_reduction(I, opts.seed, opts.groebner);
    J = red.reduced;
    artinian = red.artinian;
  } else {
    artinian = hilbert_data(I, 0).krull_dim == 0;
  }
  const int m = J.ring()->nvars();
  const PrimeField& F = J.ring()->field();

  // Rows: an Artinian quotient vanishes above its socle degree.
  int rows = 0;
  bool rows_exhaustive = true;
  auto gb = J.groebner(MonomialOrder::grevlex(*J.ring()), opts.groebner);
  if (artinian) {
    HilbertData h = hilbert_from_leads(gb->leading_monomials(), m, 0);
    rows = static_cast<int>(h.numerator.size()) - 1;
    // numerator of an Artinian quotient is its h-vector
    while (rows > 0 && h.numerator[rows] == 0) --rows;
    if (opts.row_bound && *opts.row_bound < rows) {
      rows = *opts.row_bound;
      rows_exhaustive = false;
    }
  } else if (opts.row_bound) {
    rows = *opts.row_bound;
    rows_exhaustive = false;
  } else {
    int top = 0;
    for (const auto& l : gb->leading_monomials()) top = std::max(top, l.degree());
    rows = std::max(0, top - 1);
    rows_exhaustive = false;
    table.note = "row range taken from the Groebner basis degree; not proven exhaustive";
  }
  const int cols = std::min(opts.col_bound.value_or(m), m);
  table.row_bound = rows;
  table.col_bound = opts.col_bound.value_or(n);

  Quotient Q = build_quotient(J, rows + 1, opts.groebner);
  Subsets S = make_subsets(m, std::min(m, cols + 1));

  // rank of d_{i,r}: Lambda^i A_r -> Lambda^{i-1} A_{r+1}, for 1 <= i <= cols+1
  struct Task {
    int i, r;
    std::size_t rank = 0;
    bool done = false;
  };
  std::vector<Task> tasks;
  for (int i = 1; i <= std::min(m, cols + 1); ++i) {
    for (int r = 0; r <= rows; ++r) {
      if (r < 0 || r + 1 > rows + 1) continue;
      tasks.push_back({i, r});
    }
  }
  auto skip = [&](const Task& t) {
    std::size_t R = binom(m, t.i) * Q.basis[t.r].size();
    std::size_t C = binom(m, t.i - 1) * Q.basis[t.r + 1].size();
    return R * C > opts.max_matrix_cells;
  };
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    Task& t = tasks[k];
    if (Q.basis[t.r].empty() || Q.basis[t.r + 1].empty()) {
      t.done = true;
      continue;
    }
    if (skip(t)) continue;
    try {
      t.rank = rank(koszul_matrix(Q, S, t.i, t.r, F), F);
      t.done = true;
    } catch (...) {
#pragma omp critical(seclab_betti_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  auto find = [&](int i, int r) -> const Task* {
    for (const auto& t : tasks) {
      if (t.i == i && t.r == r) return &t;
    }
    return nullptr;
  };
  for (int i = 0; i <= cols; ++i) {
    for (int r = 0; r <= rows; ++r) {
      std::size_t dimC = binom(m, i) * Q.basis[r].size();
      if (dimC == 0) continue;
      bool ok = true;
      std::size_t out_rank = 0, in_rank = 0;
      if (i >= 1) {
        const Task* t = find(i, r);
        ok = ok && t && t->done;
        if (t) out_rank = t->rank;
      }
      if (r >= 1 && i + 1 <= m) {
        const Task* t = find(i + 1, r - 1);
        ok = ok && t && t->done;
        if (t) in_rank = t->rank;
      }
      if (!ok) {
        table.frontier.emplace_back(i, i + r);
        continue;
      }
      table.set(i, i + r, static_cast<std::int64_t>(dimC - out_rank - in_rank));
    }
  }
  table.complete = table.frontier.empty() && rows_exhaustive && cols >= m;
  return table;
}

IntPoly betti_numerator(const BettiTable& t) {
  IntPoly p;
  for (const auto& [k, v] : t.entries()) {
    if (static_cast<int>(p.size()) <= k.second) p.resize(k.second + 1, 0);
    p[k.second] += (k.first % 2 == 0) ? v : -v;
  }
  trim(p);
  return p;
}

RegularityReport regularity_report(const BettiTable& t, const Ideal& I, bool accept_bounded) {
  if (!t.complete && !accept_bounded) {
    throw InvalidArgument("Betti table is incomplete; pass an explicit bound acknowledgment");
  }
  RegularityReport r;
  r.reg_module = t.regularity();
  r.reg_ideal = r.reg_module + 1;
  r.projective_dimension = t.projective_dimension();
  r.codimension = I.ring()->nvars() - hilbert_data(I, 0).krull_dim;
  r.acm = r.projective_dimension == r.codimension;
  return r;
}

}  // namespace seclab
