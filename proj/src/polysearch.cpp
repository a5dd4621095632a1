#include "tgrs/polysearch.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tgrs/textutil.hpp"

namespace tgrs {

bool GradedLexDesc::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(const Field& f, std::size_t nvars, const Felt& c) {
  MultiPoly out(f, nvars);
  out.add_term(std::vector<unsigned>(nvars, 0), c);
  return out;
}

MultiPoly MultiPoly::variable(const Field& f, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw validation_error("variable index out of range");
  MultiPoly out(f, nvars);
  std::vector<unsigned> exp(nvars, 0);
  exp[index] = 1;
  out.add_term(exp, f.one());
  return out;
}

void MultiPoly::add_term(const std::vector<unsigned>& exp, const Felt& c) {
  if (exp.size() != nvars_) throw validation_error("exponent vector has wrong arity");
  if (c.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars())
    throw validation_error("polynomial operands must share field and variable count");
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_compatible(*this, o);
  MultiPoly out = *this;
  for (const auto& [exp, c] : o.terms_) out.add_term(exp, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require_compatible(*this, o);
  MultiPoly out = *this;
  for (const auto& [exp, c] : o.terms_) out.add_term(exp, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_compatible(*this, o);
  MultiPoly out(field_, nvars_);
  std::vector<unsigned> exp(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) exp[i] = ea[i] + eb[i];
      out.add_term(exp, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Felt& c) const {
  MultiPoly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [exp, coef] : terms_) out.terms_.emplace(exp, coef * c);
  return out;
}

Felt MultiPoly::eval(const std::vector<Felt>& assignment) const {
  if (assignment.size() != nvars_) throw validation_error("assignment has wrong arity");
  Felt acc = field_.zero();
  for (const auto& [exp, c] : terms_) {
    Felt term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp[i] != 0) term = term * assignment[i].pow(static_cast<std::int64_t>(exp[i]));
    acc = acc + term;
  }
  return acc;
}

unsigned MultiPoly::max_var_degree() const {
  unsigned best = 0;
  for (const auto& [exp, c] : terms_)
    for (unsigned e : exp) best = std::max(best, e);
  return best;
}

std::optional<std::pair<std::vector<unsigned>, Felt>> MultiPoly::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.begin()->second);
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.begin()->second.inverse());
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool has_vars = std::any_of(exp.begin(), exp.end(), [](unsigned e) { return e != 0; });
    bool unit = c == field_.one();
    if (!has_vars || !unit) out << field_.str(c);
    bool lead = !has_vars || unit;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exp[i] == 0) continue;
      if (!lead) out << '*';
      lead = false;
      out << 'x' << i;
      if (exp[i] > 1) out << '^' << exp[i];
    }
  }
  return out.str();
}

MultiPoly MultiPoly::parse(const Field& f, std::size_t nvars, const std::string& text) {
  // normalize: "**" means "^", whitespace is insignificant
  std::string norm;
  norm.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '*' && i + 1 < text.size() && text[i + 1] == '*') {
      norm.push_back('^');
      ++i;
      continue;
    }
    norm.push_back(ch);
  }
  MultiPoly out(f, nvars);
  if (norm.empty()) return out;
  for (std::string_view term : detail::split_top_level(norm, '+')) {
    if (term.empty()) throw validation_error("empty term in polynomial text");
    Felt coef = f.one();
    std::vector<unsigned> exp(nvars, 0);
    for (std::string_view piece : detail::split_top_level(term, '*')) {
      if (piece.size() >= 2 && piece[0] == 'x' && std::isdigit(static_cast<unsigned char>(piece[1]))) {
        std::size_t caret = piece.find('^');
        std::size_t index = std::stoull(std::string(piece.substr(1, caret - 1)));
        unsigned degree = 1;
        if (caret != std::string_view::npos) {
          if (caret + 1 >= piece.size()) throw validation_error("missing exponent after '^'");
          degree = static_cast<unsigned>(std::stoul(std::string(piece.substr(caret + 1))));
        }
        if (index >= nvars) throw validation_error("variable index out of range in polynomial text");
        exp[index] += degree;
      } else {
        coef = coef * f.parse(piece);
      }
    }
    out.add_term(exp, coef);
  }
  return out;
}

namespace {

// Cofactor expansion along the first row; the empty determinant is 1.
MultiPoly sym_det(const Field& f, std::size_t nvars,
                  const std::vector<std::vector<MultiPoly>>& m) {
  std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(f, nvars, f.one());
  if (n == 1) return m[0][0];
  MultiPoly acc(f, nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly contrib = m[0][j] * sym_det(f, nvars, minor);
    acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

}  // namespace

SymbolicSystem symbolic_system(const EvalParams& params, const std::vector<bool>& mask) {
  const Field& f = params.field;
  std::size_t k = params.k, n = params.n, nk = n - k;
  if (mask.size() != k * nk) throw validation_error("mask must have k*(n-k) cells");
  std::vector<std::vector<int>> varmap(k, std::vector<int>(nk, -1));
  std::size_t nvars = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      if (mask[i * nk + j]) varmap[i][j] = static_cast<int>(nvars++);
  if (nvars > 12) throw guard_error("symbolic expansion limited to 12 variables");

  // symbolic generator entry for column c, row i:
  //   nu_c * (a_c^i + sum_{masked s} x_{var(i,s)} * a_c^{k+s})
  auto entry = [&](std::size_t i, std::size_t c) {
    Felt a = params.alpha[c], nu = params.nu[c];
    MultiPoly poly = MultiPoly::constant(f, nvars, nu * a.pow(static_cast<std::int64_t>(i)));
    for (std::size_t s = 0; s < nk; ++s) {
      if (varmap[i][s] < 0) continue;
      std::vector<unsigned> exp(nvars, 0);
      exp[static_cast<std::size_t>(varmap[i][s])] = 1;
      poly.add_term(exp, nu * a.pow(static_cast<std::int64_t>(k + s)));
    }
    return poly;
  };

  std::vector<std::vector<MultiPoly>> q(k), t(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) q[i].push_back(entry(i, c));
    for (std::size_t c = k; c < n; ++c) t[i].push_back(entry(i, c));
  }

  // adjugate of Q: entry (i, j) = (-1)^{i+j} * det(Q without row j, column i)
  std::vector<std::vector<MultiPoly>> adj(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<MultiPoly>> minor;
      minor.reserve(k - 1);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == j) continue;
        std::vector<MultiPoly> row;
        row.reserve(k - 1);
        for (std::size_t c = 0; c < k; ++c)
          if (c != i) row.push_back(q[r][c]);
        minor.push_back(std::move(row));
      }
      MultiPoly d = sym_det(f, nvars, minor);
      adj[i].push_back((i + j) % 2 == 0 ? d : MultiPoly(f, nvars) - d);
    }
  }

  std::vector<std::vector<MultiPoly>> pij(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < nk; ++j) {
      MultiPoly acc(f, nvars);
      for (std::size_t s = 0; s < k; ++s) acc = acc + adj[i][s] * t[s][j];
      pij[i].push_back(std::move(acc));
    }
  }

  return SymbolicSystem{params, mask, nvars, std::move(varmap), sym_det(f, nvars, q),
                        std::move(pij)};
}

MultiPoly big_P(const SymbolicSystem& sys, const std::array<std::size_t, 3>& rowsel,
                const std::array<std::size_t, 3>& colsel) {
  std::size_t k = sys.params.k, nk = sys.params.n - k;
  if (std::min(k, nk) < 3)
    throw validation_error("3x3 minor selection requires min{k, n-k} >= 3");
  for (int i = 0; i < 3; ++i) {
    if (rowsel[i] >= k || colsel[i] >= nk) throw validation_error("minor selection out of range");
    if (i > 0 && (rowsel[i] <= rowsel[i - 1] || colsel[i] <= colsel[i - 1]))
      throw validation_error("minor selection must be strictly increasing");
  }

  static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static constexpr int kSign[6] = {1, -1, -1, 1, 1, -1};
  const Field& f = sys.params.field;
  MultiPoly acc(f, sys.nvars);
  for (int s = 0; s < 6; ++s) {
    MultiPoly prod = MultiPoly::constant(f, sys.nvars, f.one());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (j != kPerm[s][i]) prod = prod * sys.pij[rowsel[i]][colsel[j]];
    acc = (kSign[s] > 0) ? acc + prod : acc - prod;
  }
  return acc;
}

namespace {

std::uint64_t grid_size_guarded(std::uint64_t q, std::size_t nvars) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (total > 100000000ull / q)
      throw guard_error("assignment grid exceeds 1e8 evaluations");
    total *= q;
  }
  if (total > 100000000ull) throw guard_error("assignment grid exceeds 1e8 evaluations");
  return total;
}

// Row-major odometer over assignments, last variable fastest.
bool next_point(std::vector<std::uint64_t>& idx, std::uint64_t q) {
  std::size_t i = idx.size();
  while (i-- > 0) {
    if (++idx[i] < q) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t count_zeros(const MultiPoly& poly) {
  const Field& f = poly.field();
  std::uint64_t q = f.order();
  grid_size_guarded(q, poly.nvars());
  std::vector<std::uint64_t> idx(poly.nvars(), 0);
  std::vector<Felt> point(poly.nvars(), f.zero());
  std::uint64_t zeros = 0;
  do {
    for (std::size_t i = 0; i < poly.nvars(); ++i) point[i] = f.elem(idx[i]);
    if (poly.eval(point).is_zero()) ++zeros;
  } while (next_point(idx, q));
  return zeros;
}

CensusTallies census_classify(const EvalParams& params, const std::vector<bool>& mask) {
  const Field& f = params.field;
  std::size_t k = params.k, nk = params.n - k;
  if (mask.size() != k * nk) throw validation_error("mask must have k*(n-k) cells");
  std::size_t nvars = 0;
  for (bool cell : mask) nvars += cell;
  std::uint64_t q = f.order();
  std::uint64_t total = grid_size_guarded(q, nvars);

  // cell positions of the variables, row-major
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      if (mask[i * nk + j]) cells.emplace_back(i, j);

  CensusTallies out;
  std::vector<bool> was_grs(total, false), was_nongrs(total, false);
  std::vector<std::uint64_t> idx(nvars, 0);
  std::uint64_t pos = 0;
  do {
    Matrix b(f, k, nk);
    for (std::size_t v = 0; v < nvars; ++v) b.set_idx(cells[v].first, cells[v].second, idx[v]);
    TgrsCode code(params, TwistMatrix(std::move(b), mask));
    switch (grs_classify(code)) {
      case GrsVerdict::NotMDS:
        break;
      case GrsVerdict::GRS:
        ++out.mds;
        ++out.grs;
        was_grs[pos] = true;
        break;
      case GrsVerdict::NonGrsMDS:
        ++out.mds;
        ++out.nongrs;
        was_nongrs[pos] = true;
        break;
    }
    ++pos;
  } while (next_point(idx, q));

  // Minor polynomial: fixed at the lexicographically first 3x3 selection
  // that is numerically nonsingular at the first non-GRS assignment owning
  // one; identically zero when no such selection exists (then every
  // assignment is a zero, and the GRS-subset property is vacuous).
  MultiPoly minor_poly(f, nvars);
  if (std::min(k, nk) >= 3) {
    std::optional<std::array<std::size_t, 3>> rowsel, colsel;
    std::vector<std::uint64_t> scan(nvars, 0);
    std::uint64_t spos = 0;
    do {
      if (was_nongrs[spos]) {
        Matrix b(f, k, nk);
        for (std::size_t v = 0; v < nvars; ++v) b.set_idx(cells[v].first, cells[v].second, scan[v]);
        auto sf = systematic_form(generator(TgrsCode(params, TwistMatrix(std::move(b), mask))));
        if (!sf.mprime) throw internal_error("MDS code without entrywise-invertible block");
        auto rows = first_subset(3);
        bool done = false;
        do {
          auto cols = first_subset(3);
          do {
            Matrix sub(f, 3, 3);
            for (std::size_t a = 0; a < 3; ++a)
              for (std::size_t c = 0; c < 3; ++c) sub.set(a, c, sf.mprime->at(rows[a], cols[c]));
            if (!sub.det().is_zero()) {
              rowsel = {rows[0], rows[1], rows[2]};
              colsel = {cols[0], cols[1], cols[2]};
              done = true;
            }
          } while (!done && next_subset(cols, nk));
        } while (!done && next_subset(rows, k));
        if (done) break;
      }
      ++spos;
    } while (next_point(scan, q));

    if (rowsel) {
      SymbolicSystem sys = symbolic_system(params, mask);
      minor_poly = big_P(sys, *rowsel, *colsel);
    }
  }

  std::vector<Felt> point(nvars, f.zero());
  std::fill(idx.begin(), idx.end(), 0);
  pos = 0;
  do {
    bool zero;
    if (minor_poly.is_zero()) {
      zero = true;
    } else {
      for (std::size_t i = 0; i < nvars; ++i) point[i] = f.elem(idx[i]);
      zero = minor_poly.eval(point).is_zero();
    }
    if (zero) ++out.pzeros;
    if (was_grs[pos] && !zero)
      throw internal_error("GRS assignment is not a zero of the minor polynomial");
    ++pos;
  } while (next_point(idx, q));

  return out;
}

}  // namespace tgrs
