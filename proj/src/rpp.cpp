// SPDX-License-Identifier: MIT
#include "rppvm/rpp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rppvm/exact.hpp"

namespace rppvm {

namespace {
std::string cell_name(int r, int c) {
  return "(row " + std::to_string(r) + ", col " + std::to_string(c) + ")";
}
}  // namespace

int RPP::volume() const {
  int v = 0;
  for (const auto& row : rows_) v = std::accumulate(row.begin(), row.end(), v);
  return v;
}

std::vector<int> RPP::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

RPP validate(const Partition& shape, std::vector<std::vector<int>> rows) {
  if (static_cast<int>(rows.size()) != shape.length())
    throw Error("filling has " + std::to_string(rows.size()) + " rows but shape " +
                to_string(shape) + " has " + std::to_string(shape.length()));
  for (int r = 1; r <= shape.length(); ++r) {
    const auto& row = rows[static_cast<size_t>(r - 1)];
    if (static_cast<int>(row.size()) != shape.part(r))
      throw Error("row " + std::to_string(r) + " of the filling has length " +
                  std::to_string(row.size()) + ", shape needs " + std::to_string(shape.part(r)));
    for (int c = 1; c <= shape.part(r); ++c) {
      int v = row[static_cast<size_t>(c - 1)];
      if (v < 0) throw Error("negative entry at " + cell_name(r, c));
      if (c > 1 && row[static_cast<size_t>(c - 2)] > v)
        throw Error("row decreases from " + cell_name(r, c - 1) + " to " + cell_name(r, c));
      if (r > 1 && rows[static_cast<size_t>(r - 2)][static_cast<size_t>(c - 1)] > v)
        throw Error("column decreases from " + cell_name(r - 1, c) + " to " + cell_name(r, c));
    }
  }
  RPP out;
  out.shape_ = shape;
  out.rows_ = std::move(rows);
  return out;
}

RPP zero_rpp(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(static_cast<size_t>(p), 0);
  return validate(shape, rows);
}

std::string to_string(const RPP& r) {
  // Top row first, the way the diagram is drawn.
  std::ostringstream os;
  for (auto it = r.rows().rbegin(); it != r.rows().rend(); ++it) {
    for (size_t c = 0; c < it->size(); ++c) os << (c ? " " : "") << (*it)[c];
    os << '\n';
  }
  return os.str();
}

std::vector<Rel> interaction_pattern(const Partition& lambda) {
  if (lambda.empty()) return {};
  int h = conjugate(lambda).part(1);
  int len = lambda.part(1) + h;
  MayaDiagram m = maya(lambda, maya_min_half_width(lambda));
  std::vector<Rel> out;
  for (int k = 0; k < len; ++k) out.push_back(m.particle_at(-h + k) ? Rel::Above : Rel::Below);
  return out;
}

Partition shape_from_pattern(const std::vector<Rel>& pattern) {
  if (pattern.empty()) return Partition();
  if (pattern.front() != Rel::Below || pattern.back() != Rel::Above)
    throw Error("relation pattern must start with ⪯ and end with ⪰");
  std::vector<int> parts;
  int holes = 0;
  for (Rel r : pattern) {
    if (r == Rel::Below)
      ++holes;
    else
      parts.push_back(holes);
  }
  std::reverse(parts.begin(), parts.end());
  Partition lambda(parts);
  if (interaction_pattern(lambda) != pattern) throw Error("relation pattern does not match any shape");
  return lambda;
}

std::string to_string(const SliceSequence& s) {
  std::ostringstream os;
  for (size_t k = 0; k < s.slices.size(); ++k) {
    os << (s.slices[k].empty() ? std::string("∅") : to_string(s.slices[k]));
    if (k < s.pattern.size()) os << ' ' << symbol(s.pattern[k]) << ' ';
  }
  return os.str();
}

namespace {

// Cells of lambda with the given content, farthest from the origin first.
std::vector<Cell> diagonal(const Partition& lambda, int content) {
  std::vector<Cell> out;
  for (int r = lambda.length(); r >= 1; --r) {
    int c = r + content;
    if (c >= 1 && c <= lambda.part(r)) out.push_back({r, c});
  }
  return out;
}

int slice_content(const Partition& lambda, int k) { return -conjugate(lambda).part(1) + k; }

bool related(const Partition& left, Rel rel, const Partition& right) {
  return rel == Rel::Below ? interlaces(left, right) : interlaces(right, left);
}

}  // namespace

int diagonal_length(const Partition& lambda, int k) {
  return static_cast<int>(diagonal(lambda, slice_content(lambda, k)).size());
}

SliceSequence to_slices(const RPP& r) {
  const Partition& lambda = r.shape();
  SliceSequence s;
  s.pattern = interaction_pattern(lambda);
  int n = static_cast<int>(s.pattern.size()) - 1;
  s.slices.emplace_back();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> parts;
    for (const Cell& c : diagonal(lambda, slice_content(lambda, k))) parts.push_back(r.at(c));
    s.slices.emplace_back(parts);
  }
  if (n >= 0) s.slices.emplace_back();
  return s;
}

RPP from_slices(const SliceSequence& s) {
  Partition lambda = shape_from_pattern(s.pattern);
  int n = static_cast<int>(s.pattern.size()) - 1;
  if (static_cast<int>(s.slices.size()) != n + 2)
    throw Error("slice sequence has the wrong number of slices for its pattern");
  if (!s.slices.front().empty() || !s.slices.back().empty())
    throw Error("slice sequence must start and end with the empty partition");
  for (int k = 0; k <= n; ++k)
    if (!related(s.slices[static_cast<size_t>(k)], s.pattern[static_cast<size_t>(k)],
                 s.slices[static_cast<size_t>(k + 1)]))
      throw Error("interlacing violated between slices " + std::to_string(k) + " and " +
                  std::to_string(k + 1));
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(static_cast<size_t>(p), 0);
  for (int k = 1; k <= n; ++k) {
    auto cells = diagonal(lambda, slice_content(lambda, k));
    const Partition& mu = s.slices[static_cast<size_t>(k)];
    if (mu.length() > static_cast<int>(cells.size()))
      throw Error("slice " + std::to_string(k) + " is longer than its diagonal");
    for (size_t i = 0; i < cells.size(); ++i)
      rows[static_cast<size_t>(cells[i].row - 1)][static_cast<size_t>(cells[i].col - 1)] =
          mu.part(static_cast<int>(i) + 1);
  }
  return validate(lambda, rows);
}

namespace {

struct SliceWalker {
  const Partition& lambda;
  std::vector<Rel> pattern;
  std::vector<int> diag_len;
  int n;
  const std::function<void(const RPP&)>& emit;
  SliceSequence seq;

  // Choose the parts of slice k one position at a time.
  void choose(int k, const Partition& prev, std::vector<int>& parts, int pos, int budget) {
    int d = diag_len[static_cast<size_t>(k)];
    if (pos > d) {
      seq.slices.emplace_back(parts);
      step(k + 1, budget);
      seq.slices.pop_back();
      return;
    }
    Rel rel = pattern[static_cast<size_t>(k - 1)];
    int lo, hi;
    if (rel == Rel::Below) {
      lo = prev.part(pos);
      hi = pos == 1 ? lo + budget : prev.part(pos - 1);
    } else {
      lo = prev.part(pos + 1);
      hi = prev.part(pos);
    }
    hi = std::min(hi, budget);
    for (int v = lo; v <= hi; ++v) {
      parts[static_cast<size_t>(pos - 1)] = v;
      choose(k, prev, parts, pos + 1, budget - v);
    }
    parts[static_cast<size_t>(pos - 1)] = 0;
  }

  void step(int k, int budget) {
    const Partition& prev = seq.slices.back();
    if (k == n + 1) {
      // The last relation is ⪰ against ∅, so the final slice has one part.
      if (prev.length() > 1) return;
      seq.slices.emplace_back();
      emit(from_slices(seq));
      seq.slices.pop_back();
      return;
    }
    std::vector<int> parts(static_cast<size_t>(diag_len[static_cast<size_t>(k)]), 0);
    Partition p = prev;  // seq.slices may reallocate below
    choose(k, p, parts, 1, budget);
  }
};

}  // namespace

void for_each_rpp(const Partition& lambda, int N, const std::function<void(const RPP&)>& f) {
  if (N < 0) return;
  if (lambda.empty()) {
    f(zero_rpp(lambda));
    return;
  }
  SliceWalker w{lambda, interaction_pattern(lambda), {}, 0, f, {}};
  w.n = static_cast<int>(w.pattern.size()) - 1;
  for (int k = 0; k <= w.n + 1; ++k)
    w.diag_len.push_back(k == 0 || k == w.n + 1 ? 0 : diagonal_length(lambda, k));
  w.seq.pattern = w.pattern;
  w.seq.slices.emplace_back();
  w.step(1, N);
}

std::vector<RPP> enumerate(const Partition& lambda, int N) {
  std::vector<RPP> out;
  for_each_rpp(lambda, N, [&](const RPP& r) { out.push_back(r); });
  std::sort(out.begin(), out.end(),
            [](const RPP& a, const RPP& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

}  // namespace rppvm
