#include "jc/tableaux.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace jc {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> p;
  for (const auto& r : rows) p.push_back(int(r.size()));
  return Partition(p);
}

bool rows_valid(const std::vector<std::vector<int>>& rows, bool strict_rows) {
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && (strict_rows ? rows[r][c] <= rows[r][c - 1] : rows[r][c] < rows[r][c - 1]))
        return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

}  // namespace

Partition SemiStandardTableau::shape() const { return shape_of(rows); }

std::vector<int> SemiStandardTableau::content() const {
  std::vector<int> c;
  for (const auto& r : rows)
    for (int v : r) {
      if (int(c.size()) < v) c.resize(size_t(v), 0);
      ++c[size_t(v - 1)];
    }
  return c;
}

bool SemiStandardTableau::is_valid() const { return rows_valid(rows, false); }

Partition StandardTableau::shape() const { return shape_of(rows); }

bool StandardTableau::is_valid() const {
  if (!rows_valid(rows, true)) return false;
  int n = shape().size();
  std::vector<bool> seen(size_t(n + 1), false);
  for (const auto& r : rows)
    for (int v : r) {
      if (v > n || seen[size_t(v)]) return false;
      seen[size_t(v)] = true;
    }
  return true;
}

std::vector<SemiStandardTableau> enumerate_ssyt(const Partition& shape,
                                                const std::vector<int>& content) {
  if (std::accumulate(content.begin(), content.end(), 0) != shape.size())
    throw std::invalid_argument("enumerate_ssyt: shape and content sizes differ");
  std::vector<SemiStandardTableau> out;
  SemiStandardTableau T;
  for (int len : shape.parts()) T.rows.emplace_back(size_t(len), 0);
  std::vector<int> left = content;
  const int s = int(content.size());
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == shape.length()) {
      out.push_back(T);
      return;
    }
    if (c == shape[r]) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, T.rows[size_t(r)][size_t(c - 1)]);
    if (r > 0) lo = std::max(lo, T.rows[size_t(r - 1)][size_t(c)] + 1);
    for (int v = lo; v <= s; ++v) {
      if (left[size_t(v - 1)] == 0) continue;
      --left[size_t(v - 1)];
      T.rows[size_t(r)][size_t(c)] = v;
      rec(r, c + 1);
      ++left[size_t(v - 1)];
    }
  };
  rec(0, 0);
  return out;
}

namespace {

void enumerate_standard(const Partition& shape,
                        const std::function<bool(const StandardTableau&, int, int, int)>& allow,
                        const std::function<void(const StandardTableau&)>& emit) {
  const int n = shape.size();
  StandardTableau T;
  T.rows.assign(size_t(shape.length()), {});
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      emit(T);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      int c = int(T.rows[size_t(r)].size());
      if (c >= shape[r]) continue;
      if (r > 0 && int(T.rows[size_t(r - 1)].size()) <= c) continue;
      if (!allow(T, r, c, k)) continue;
      T.rows[size_t(r)].push_back(k);
      rec(k + 1);
      T.rows[size_t(r)].pop_back();
    }
  };
  rec(1);
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  enumerate_standard(
      shape, [](const StandardTableau&, int, int, int) { return true; },
      [&](const StandardTableau& T) { out.push_back(T); });
  return out;
}

IntLaurent s_weight(const SemiStandardTableau& T) {
  std::vector<int> content = T.content();
  IntLaurent num(1);
  for (int c : content) num *= q_factorial(c);
  IntLaurent den(1);
  for (const auto& row : T.rows) {
    std::vector<int> beta(content.size(), 0);
    for (int v : row) ++beta[size_t(v - 1)];
    for (int b : beta) den *= q_factorial(b);
  }
  return num.exact_div(den);
}

IntLaurent r_weight(const SemiStandardTableau& T) {
  IntLaurent r(1);
  for (size_t i = 1; i < T.rows.size(); ++i) {
    const auto& above = T.rows[i - 1];
    for (size_t j = 0; j < T.rows[i].size(); ++j) {
      int cnt = 0;
      for (size_t jp = j; jp < above.size(); ++jp)
        if (above[jp] < T.rows[i][j]) ++cnt;
      r *= q_int(cnt);
    }
  }
  return r;
}

IntLaurent b_via_tableaux(const Partition& shape, const Partition& content) {
  IntLaurent sum;
  for (const auto& T : enumerate_ssyt(shape, content.parts())) sum += s_weight(T) * r_weight(T);
  return sum;
}

std::vector<StandardTableau> enumerate_syt_h(const Partition& mu, const HessenbergFunction& h) {
  if (mu.size() != h.n()) throw std::invalid_argument("enumerate_syt_h: size mismatch");
  std::vector<StandardTableau> out;
  enumerate_standard(
      mu,
      [&](const StandardTableau& T, int r, int c, int k) {
        return r == 0 || h.precedes(T.rows[size_t(r - 1)][size_t(c)], k);
      },
      [&](const StandardTableau& T) { out.push_back(T); });
  return out;
}

IntLaurent underline_F_term(const StandardTableau& T, const HessenbergFunction& h) {
  int gamma = 0;
  IntLaurent prod(1);
  for (size_t r = 1; r < T.rows.size(); ++r) {
    for (size_t c = 0; c < T.rows[r].size(); ++c) {
      const int tb = T.rows[r][c];
      const auto& up_row = T.rows[r - 1];
      int arm = 0;
      for (size_t cp = c + 1; cp < up_row.size(); ++cp)
        if (h.precedes(up_row[cp], tb)) ++arm;
      prod *= q_int(arm + 1);
      for (size_t rr = 0; rr < r; ++rr)
        for (int tc : T.rows[rr])
          if (tc < tb && !h.precedes(tc, tb)) ++gamma;
    }
  }
  return prod.shifted(gamma);
}

IntLaurent underline_F(const Partition& mu, const HessenbergFunction& h) {
  IntLaurent sum;
  for (const auto& T : enumerate_syt_h(mu, h)) sum += underline_F_term(T, h);
  return sum;
}

nlohmann::json to_json(const SemiStandardTableau& T) { return nlohmann::json(T.rows); }
nlohmann::json to_json(const StandardTableau& T) { return nlohmann::json(T.rows); }

}  // namespace jc
