#include "tgrs/census.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

#include "tgrs/classify.hpp"

namespace tgrs {

std::uint64_t tier_budget(CensusTier tier) {
  switch (tier) {
    case CensusTier::quick: return 1000000ULL;
    case CensusTier::standard: return 100000000ULL;
    case CensusTier::longrun: return 10000000000ULL;
  }
  throw internal_error("unknown census tier");
}

CensusTier parse_tier(const std::string& name) {
  if (name == "quick") return CensusTier::quick;
  if (name == "standard") return CensusTier::standard;
  if (name == "long") return CensusTier::longrun;
  throw validation_error("unknown census tier '" + name + "' (expected quick, standard or long)");
}

std::string tier_name(CensusTier tier) {
  switch (tier) {
    case CensusTier::quick: return "quick";
    case CensusTier::standard: return "standard";
    case CensusTier::longrun: return "long";
  }
  throw internal_error("unknown census tier");
}

namespace {

struct CellRef {
  std::size_t row, col;
};

// Per-worker enumeration state over a contiguous range of the outer odometer
// (all masked cells but the last).  The innermost cell is never looped over:
// for a fixed outer assignment, det(I + B F_T) is affine in that cell's
// value (the cell contributes one scaled F-row to one row of the matrix), so
// each subset forbids at most one value of the cell and the line's member
// count is q minus the number of distinct forbidden values.
struct Worker {
  const detail::FieldData* fd;
  std::size_t k, nk;                          // twist matrix is k x nk
  const std::vector<std::vector<std::uint64_t>>* ftab;  // per subset, (nk x k) row-major
  const std::vector<std::uint64_t>* base;     // fixed cells, masked cells zeroed
  const std::vector<CellRef>* cells;          // masked cells in row-major order
  std::size_t sample_limit;
  const std::atomic<bool>* stop;

  std::uint64_t count = 0;
  std::uint64_t lines = 0;  // outer lines fully processed
  std::vector<std::vector<std::uint64_t>> samples;  // full twist matrices, raw indices

  void run(std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    std::uint64_t q = fd->q;
    std::size_t w = cells->size();
    std::size_t nsub = ftab->size();
    const CellRef inner = (*cells)[w - 1];

    // decode the range start into outer digits, last digit fastest
    std::vector<std::uint64_t> digit(w - 1, 0);
    std::uint64_t rest = lo;
    for (std::size_t i = w - 1; i-- > 0;) {
      digit[i] = rest % q;
      rest /= q;
    }

    std::vector<std::uint64_t> b(*base);
    for (std::size_t i = 0; i + 1 < w; ++i)
      b[(*cells)[i].row * nk + (*cells)[i].col] = digit[i];

    // m[t] = I + B F_T for the current outer assignment (inner cell = 0)
    std::vector<std::vector<std::uint64_t>> m(nsub, std::vector<std::uint64_t>(k * k));
    for (std::size_t t = 0; t < nsub; ++t) {
      const std::uint64_t* f = (*ftab)[t].data();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t s = 0; s < k; ++s) {
          std::uint64_t acc = i == s ? 1 : 0;  // the one element always has index 1
          for (std::size_t j = 0; j < nk; ++j)
            acc = fd->add(acc, fd->mul(b[i * nk + j], f[j * k + s]));
          m[t][i * k + s] = acc;
        }
    }

    std::vector<std::uint8_t> allowed(q);
    std::vector<std::uint64_t> scratch(k * k);
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (stop != nullptr && stop->load(std::memory_order_relaxed)) return;
      std::fill(allowed.begin(), allowed.end(), std::uint8_t{1});
      bool alive = true;
      for (std::size_t t = 0; t < nsub; ++t) {
        const std::uint64_t* mt = m[t].data();
        std::copy(mt, mt + k * k, scratch.begin());
        std::uint64_t run = detail::det_inplace(*fd, scratch.data(), k);
        std::copy(mt, mt + k * k, scratch.begin());
        const std::uint64_t* frow = (*ftab)[t].data() + inner.col * k;
        std::copy(frow, frow + k, scratch.begin() + inner.row * k);
        std::uint64_t slope = detail::det_inplace(*fd, scratch.data(), k);
        if (slope == 0) {
          if (run == 0) {
            alive = false;  // singular for every value of the inner cell
            break;
          }
          continue;
        }
        allowed[fd->div(fd->neg(run), slope)] = 0;
      }
      if (alive) {
        std::uint64_t line = 0;
        for (std::uint64_t v = 0; v < q; ++v) line += allowed[v];
        count += line;
        if (samples.size() < sample_limit && line > 0) {
          for (std::uint64_t v = 0; v < q && samples.size() < sample_limit; ++v) {
            if (!allowed[v]) continue;
            samples.push_back(b);
            samples.back()[inner.row * nk + inner.col] = v;
          }
        }
      }
      ++lines;
      if (r + 1 >= hi) break;
      // advance the outer odometer, applying row updates for changed cells
      for (std::size_t pos = w - 1; pos-- > 0;) {
        std::uint64_t old = digit[pos];
        std::uint64_t next = old + 1 == q ? 0 : old + 1;
        digit[pos] = next;
        const CellRef cell = (*cells)[pos];
        b[cell.row * nk + cell.col] = next;
        std::uint64_t delta = fd->sub(next, old);
        for (std::size_t t = 0; t < nsub; ++t) {
          const std::uint64_t* f = (*ftab)[t].data() + cell.col * k;
          std::uint64_t* row = m[t].data() + cell.row * k;
          for (std::size_t s = 0; s < k; ++s)
            row[s] = fd->add(row[s], fd->mul(delta, f[s]));
        }
        if (next != 0) break;  // no carry
      }
    }
  }
};

}  // namespace

CensusReport census_omega(const EvalParams& params, const Matrix& base,
                          const std::vector<bool>& mask, const CensusOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t k = params.k, nk = params.n - params.k;
  if (base.rows() != k || base.cols() != nk)
    throw validation_error("census base matrix must be k x (n-k)");
  if (!(base.field() == params.field))
    throw validation_error("census base matrix field differs from the evaluation field");
  if (mask.size() != k * nk)
    throw validation_error("census mask size must be k*(n-k)");

  const detail::FieldData* fd = params.field.data();
  const std::uint64_t q = fd->q;

  std::vector<CellRef> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      if (mask[i * nk + j]) cells.push_back({i, j});
  const std::size_t w = cells.size();

  const std::uint64_t budget = tier_budget(opts.tier);
  unsigned __int128 wide = 1;
  for (std::size_t i = 0; i < w; ++i) {
    wide *= q;
    if (wide > budget)
      throw guard_error("census grid q^w exceeds the " + tier_name(opts.tier) +
                        " tier budget of " + std::to_string(budget));
  }
  const std::uint64_t total = static_cast<std::uint64_t>(wide);

  if (binomial_count(params.n, k) > 1000000ULL)
    throw guard_error("census subset table C(n,k) exceeds 10^6");

  CensusReport report;
  report.total = total;

  std::vector<std::uint64_t> base_raw(k * nk);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      base_raw[i * nk + j] = mask[i * nk + j] ? 0 : base.idx(i, j);

  auto matrix_of = [&](const std::vector<std::uint64_t>& raw) {
    Matrix out(params.field, k, nk);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < nk; ++j) out.set_idx(i, j, raw[i * nk + j]);
    return out;
  };

  if (w == 0) {
    Matrix b = matrix_of(base_raw);
    if (mds_fast(TgrsCode(params, TwistMatrix(b))).is_mds) {
      report.omega_count = 1;
      if (opts.sample_limit > 0) report.sample_members.push_back(b);
    }
    report.processed = 1;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  // subset pre-pass: every F_T once, as raw-index tables
  std::vector<std::vector<std::uint64_t>> ftab;
  {
    std::vector<std::size_t> t = first_subset(k);
    do {
      SubsetData sd = subset_data(params, t);
      std::vector<std::uint64_t> f(nk * k);
      for (std::size_t r = 0; r < nk; ++r)
        for (std::size_t s = 0; s < k; ++s) f[r * k + s] = sd.F.idx(r, s);
      ftab.push_back(std::move(f));
    } while (next_subset(t, params.n));
  }

  const std::uint64_t outer = total / q;
  unsigned nthreads = opts.threads == 0 ? 1 : opts.threads;
  nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, outer));
  if (nthreads == 0) nthreads = 1;

  std::vector<Worker> workers(nthreads);
  for (auto& wk : workers) {
    wk.fd = fd;
    wk.k = k;
    wk.nk = nk;
    wk.ftab = &ftab;
    wk.base = &base_raw;
    wk.cells = &cells;
    wk.sample_limit = opts.sample_limit;
    wk.stop = opts.stop;
  }

  const std::uint64_t chunk = outer / nthreads, extra = outer % nthreads;
  std::vector<std::thread> pool;
  std::uint64_t at = 0;
  for (unsigned i = 0; i < nthreads; ++i) {
    std::uint64_t len = chunk + (i < extra ? 1 : 0);
    std::uint64_t lo = at, hi = at + len;
    at = hi;
    if (i + 1 == nthreads)
      workers[i].run(lo, hi);  // run the last range inline
    else
      pool.emplace_back([&workers, i, lo, hi] { workers[i].run(lo, hi); });
  }
  for (auto& th : pool) th.join();

  for (auto& wk : workers) {
    report.omega_count += wk.count;
    report.processed += wk.lines * q;
    for (auto& raw : wk.samples) {
      if (report.sample_members.size() >= opts.sample_limit) break;
      report.sample_members.push_back(matrix_of(raw));
    }
  }
  report.complete = report.processed == report.total;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace tgrs
