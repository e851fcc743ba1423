#include "kleinian/orbifolds.hpp"

namespace kleinian {

namespace {

ExtExp fin(int k) { return ExtExp::fin(k); }

CensusEntry entry(Schema s, std::vector<int> e, bool compact) {
  GroupSpec g{s, {}};
  for (int k : e) g.exponents.push_back(fin(k));
  return {std::move(g), compact};
}

void compact_entries(int bound, const std::function<void(const CensusEntry&)>& emit) {
  auto add = [&](Schema s, std::vector<int> e) { emit(entry(s, std::move(e), true)); };
  for (int m = 3; m <= 5; ++m) add(Schema::PH, {4, m, 3});
  add(Schema::H, {2, 2, 3, 5});
  add(Schema::H, {2, 2, 5, 3});
  add(Schema::H, {2, 3, 5, 2});
  add(Schema::Tet6, {4});
  add(Schema::Tet6, {5});
  add(Schema::Tet, {5, 4, 3});
  add(Schema::Tet, {5, 5, 3});
  add(Schema::Tet, {3, 3, 5});
  for (int n = 8; n <= bound; n += 2) {
    add(Schema::P, {n, 3, 3});
    add(Schema::P, {n, 3, 5});
  }
  for (int n = 4; n <= bound; n += 2) add(Schema::P, {n, 5, 3});
  for (int n = 7; n <= bound; n += 2) {
    for (int q = 3; q <= 5; ++q) add(Schema::GTet2, {n, 3, q});
  }
  for (int n = 5; n <= bound; n += 2) add(Schema::GTet2, {n, 5, 3});
  for (int n = 3; n <= bound; n += 2) {
    for (int m = 3; m <= bound; m += 2) {
      // 1/n + 1/m < 1/2
      if (2 * (n + m) < n * m) add(Schema::GTet2, {n, m, 2});
    }
  }
  for (int n = 5; n <= bound; n += 2) add(Schema::S3, {n, 2, 2});
  add(Schema::S3, {5, 2, 3});
  add(Schema::S3, {5, 3, 2});
  add(Schema::S3, {3, 4, 2});
  add(Schema::S3, {3, 5, 2});
  for (int n = 7; n <= bound; ++n) add(Schema::GTet1, {n, 3, 2});
}

void cusped_entries(int bound, const std::function<void(const CensusEntry&)>& emit) {
  auto add = [&](Schema s, std::vector<int> e) { emit(entry(s, std::move(e), false)); };
  add(Schema::GT, {3, 3, 3});
  add(Schema::GT, {4, 4, 2});
  add(Schema::GT, {4, 3, 2});
  add(Schema::PH, {4, 6, 3});
  for (int m = 2; m <= 6; ++m) add(Schema::PH, {6, m, 3});
  for (int m = 3; m <= 6; ++m) add(Schema::Tet, {6, m, 3});
  add(Schema::S2, {4, 3, 2});
  add(Schema::S2, {4, 4, 2});
  for (int n = 7; n <= bound; n += 2) add(Schema::GTet2, {n, 3, 6});
  add(Schema::S3, {3, 6, 2});
  for (int n = 8; n <= bound; n += 2) add(Schema::GTet1, {n, 3, 3});
}

}  // namespace

void for_each_census_entry(CensusFilter filter, int bound,
                           const std::function<void(const CensusEntry&)>& emit) {
  if (filter != CensusFilter::Cusped) compact_entries(bound, emit);
  if (filter != CensusFilter::Compact) cusped_entries(bound, emit);
}

std::vector<CensusEntry> finite_volume_census(CensusFilter filter, int bound,
                                              std::optional<Schema> schema) {
  std::vector<CensusEntry> out;
  for_each_census_entry(filter, bound, [&](const CensusEntry& e) {
    if (!schema || e.group.schema == *schema) out.push_back(e);
  });
  return out;
}

std::vector<std::pair<FamilyId, SlotCandidate>> census_row_candidates(const CensusEntry& e) {
  std::vector<std::pair<FamilyId, SlotCandidate>> out;
  const auto& x = e.group.exponents;
  auto v = [&](std::size_t i) { return x[i].value(); };
  auto A = [](int p) { return UPoint::angle(p); };
  auto add = [&](FamilyId id, IntSlots ints, UPointSlots ups) {
    out.push_back({id, {std::move(ints), std::move(ups)}});
  };
  using R = RowSign;
  switch (e.group.schema) {
    case Schema::GT:
      add({1}, {}, {{"u", A(v(0))}, {"v", A(v(1))}, {"w", A(2 * v(2))}});
      break;
    case Schema::PH:
      add({17}, {{"n", v(0)}}, {{"u", A(2 * v(1))}, {"v", A(v(2))}});
      break;
    case Schema::H:
      if (v(3) == 2) {
        add({10}, {{"n", std::max(v(1), v(2))}}, {});
      } else if (std::min(v(1), v(2)) == 3 && std::max(v(1), v(2)) == 3) {
        add({15}, {{"q", 2 * v(3)}}, {});
      } else if (v(3) == 5) {
        add({12, R::Plus}, {}, {});
        add({12, R::Minus}, {}, {});
        add({13}, {}, {});
        add({14}, {}, {});
      } else {
        add({11, R::Plus}, {}, {});
        add({11, R::Minus}, {}, {});
      }
      break;
    case Schema::Tet:
      add({2}, {}, {{"u", A(v(0))}, {"v", A(v(1))}, {"w", A(v(2))}});
      if (v(2) == 3) {
        for (int k : {0, 1}) {
          const int n = v(k), other = v(1 - k);
          if (n >= 5 && n % 2 == 1) add({3}, {{"n", n}}, {{"u", A(other)}});
        }
      }
      break;
    case Schema::Tet6:
      add({9}, {{"m", v(0)}}, {});
      break;
    case Schema::P:
      add({19}, {{"n", v(0)}}, {{"u", A(v(1))}, {"v", A(v(2))}});
      break;
    case Schema::GTet1:
      if (v(0) % 2 == 0) {
        add({20}, {{"n", v(0)}}, {{"u", A(v(1))}, {"v", A(2 * v(2))}});
      } else {
        add({22}, {{"n", v(0)}}, {});
      }
      break;
    case Schema::GTet2:
      add({23}, {{"n", v(0)}}, {{"u", A(v(1))}, {"v", A(v(2))}});
      if (v(1) == 3) add({24}, {{"n", v(0)}}, {{"v", A(v(2))}});
      break;
    case Schema::S2:
      add({18}, {{"n", v(0)}}, {{"u", A(2 * v(1))}, {"v", A(2 * v(2))}});
      break;
    case Schema::S3:
      add({21}, {{"n", v(0)}}, {{"u", A(2 * v(1))}, {"v", A(v(2))}});
      break;
    case Schema::R:
      add({16}, {{"n", v(0)}}, {});
      break;
  }
  return out;
}

}  // namespace kleinian
