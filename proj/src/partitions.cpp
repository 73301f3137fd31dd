// SPDX-License-Identifier: MIT
#include "rppvm/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rppvm/exact.hpp"

namespace rppvm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error("partition has a negative part: " + to_string(*this));
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error("partition parts must be weakly decreasing: " + to_string(*this));
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<size_t>(lambda.part(1)), 0);
  for (int j = 1; j <= lambda.part(1); ++j) {
    int h = 0;
    while (lambda.part(h + 1) >= j) ++h;
    out[static_cast<size_t>(j - 1)] = h;
  }
  return Partition(out);
}

bool interlaces(const Partition& mu, const Partition& lambda) {
  int n = std::max(mu.length(), lambda.length()) + 1;
  for (int i = 1; i <= n; ++i) {
    if (lambda.part(i) < mu.part(i)) return false;
    if (mu.part(i) < lambda.part(i + 1)) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int cap) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int a = std::min(rem, cap); a >= 1; --a) {
      cur.push_back(a);
      self(self, rem - a, a);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

int arm(const Partition& lambda, const Cell& c) {
  if (!lambda.contains(c)) throw Error("cell outside the diagram");
  return lambda.part(c.row) - c.col;
}

int leg(const Partition& lambda, const Cell& c) {
  if (!lambda.contains(c)) throw Error("cell outside the diagram");
  return conjugate(lambda).part(c.col) - c.row;
}

int hook(const Partition& lambda, const Cell& c) { return arm(lambda, c) + leg(lambda, c) + 1; }

bool MayaDiagram::particle_at(int k) const {
  int s = k + half_width;
  if (s < 0) return true;
  if (s >= static_cast<int>(sites.size())) return false;
  return sites[static_cast<size_t>(s)];
}

int maya_min_half_width(const Partition& lambda) {
  return std::max(lambda.length(), lambda.part(1)) + 1;
}

MayaDiagram maya(const Partition& lambda, int half_width) {
  if (half_width < maya_min_half_width(lambda))
    throw Error("Maya window too narrow for " + to_string(lambda));
  MayaDiagram m;
  m.half_width = half_width;
  m.sites.assign(static_cast<size_t>(2 * half_width), false);
  // Particles at lambda_i - i for i = 1, 2, ...; stop once below the window.
  for (int i = 1; lambda.part(i) - i >= -half_width; ++i)
    m.sites[static_cast<size_t>(lambda.part(i) - i + half_width)] = true;
  if (!m.sites.front() || m.sites.back())
    throw Error("Maya window does not reach the constant tails");
  return m;
}

Partition partition_from_maya(const MayaDiagram& m) {
  if (m.sites.empty() || !m.sites.front() || m.sites.back())
    throw Error("Maya window does not reach the constant tails");
  // Balance check: particles right of center equal holes left of it.
  int right_particles = 0, left_holes = 0;
  for (int s = 0; s < static_cast<int>(m.sites.size()); ++s) {
    bool p = m.sites[static_cast<size_t>(s)];
    if (s >= m.half_width && p) ++right_particles;
    if (s < m.half_width && !p) ++left_holes;
  }
  if (right_particles != left_holes) throw Error("Maya diagram is not balanced at its center");
  std::vector<int> parts;
  int holes = 0;
  for (bool p : m.sites) {
    if (!p)
      ++holes;
    else
      parts.push_back(holes);
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(parts);
}

std::string to_string(const MayaDiagram& m) {
  std::string out;
  for (int s = 0; s < static_cast<int>(m.sites.size()); ++s) {
    if (s == m.half_width) out += '|';
    out += m.sites[static_cast<size_t>(s)] ? "●" : "○";
  }
  return out;
}

int strip_index(const Partition& lambda, const Cell& c) {
  if (!lambda.contains(c)) throw Error("cell outside the diagram");
  int m = 1;
  while (lambda.contains({c.row + m, c.col + m})) ++m;
  return m;
}

std::vector<BorderStrip> border_strips(const Partition& lambda) {
  std::vector<BorderStrip> strips;
  for (const Cell& c : lambda.cells()) {
    int m = strip_index(lambda, c);
    if (m > static_cast<int>(strips.size())) strips.resize(static_cast<size_t>(m));
    strips[static_cast<size_t>(m - 1)].cells.push_back(c);
  }
  for (size_t i = 0; i < strips.size(); ++i) {
    strips[i].index = static_cast<int>(i) + 1;
    // A border strip has one cell per content; top-left end has the
    // smallest content.
    std::sort(strips[i].cells.begin(), strips[i].cells.end(),
              [](const Cell& a, const Cell& b) { return a.content() < b.content(); });
  }
  return strips;
}

}  // namespace rppvm
